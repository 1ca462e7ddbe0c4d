#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ltorus {

// Exact integer coefficients. The skein recursion multiplies long chains of
// small factors, so fixed-width integers are not safe here.
using Int = boost::multiprecision::cpp_int;

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// (2k-1)!! = (2k)!/(2^k k!), the number of perfect matchings of 2k objects.
inline Int odd_double_factorial(int k) {
    Int r = 1;
    for (int i = 2 * k - 1; i > 1; i -= 2) r *= i;
    return r;
}

inline Int int_pow(Int base, int e) {
    Int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace ltorus
