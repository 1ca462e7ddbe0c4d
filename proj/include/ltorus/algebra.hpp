#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ltorus/ints.hpp"

namespace ltorus {

// Laurent polynomial in z with exact integer coefficients.
// Invariant: no zero coefficients are stored.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(Int c) { if (c != 0) terms_[0] = std::move(c); }
    ZPoly(int c) : ZPoly(Int(c)) {}

    static ZPoly monomial(int z_exp, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int z_exp) const;
    int min_degree() const;  // throws UndefinedOnZero on 0
    int max_degree() const;

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly operator+(const ZPoly& o) const { ZPoly r = *this; r += o; return r; }
    ZPoly operator-(const ZPoly& o) const { ZPoly r = *this; r -= o; return r; }
    ZPoly operator-() const;
    ZPoly operator*(const ZPoly& o) const;
    bool operator==(const ZPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    std::string str() const;
    static ZPoly parse(const std::string& text);

private:
    std::map<int, Int> terms_;  // z-exponent -> coefficient

    void add_term(int z_exp, const Int& c);
    friend class AZPoly;
};

// Laurent polynomial in a and z: the coefficient ring of the skein module.
class AZPoly {
public:
    using Key = std::pair<int, int>;  // (a-exponent, z-exponent)

    // Canonical term order: a descending, then z ascending.
    struct KeyOrder {
        bool operator()(const Key& l, const Key& r) const {
            if (l.first != r.first) return l.first > r.first;
            return l.second < r.second;
        }
    };

    AZPoly() = default;
    AZPoly(Int c) { if (c != 0) terms_[{0, 0}] = std::move(c); }
    AZPoly(int c) : AZPoly(Int(c)) {}
    AZPoly(const ZPoly& z);

    static AZPoly monomial(int a_exp, int z_exp, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int, KeyOrder>& terms() const { return terms_; }

    // All terms with a-exponent exactly e, as a polynomial in z.
    ZPoly coeff_a(int e) const;
    // Maximum a-exponent over nonzero terms; throws UndefinedOnZero on 0.
    int a_degree() const;

    AZPoly& operator+=(const AZPoly& o);
    AZPoly& operator-=(const AZPoly& o);
    AZPoly operator+(const AZPoly& o) const { AZPoly r = *this; r += o; return r; }
    AZPoly operator-(const AZPoly& o) const { AZPoly r = *this; r -= o; return r; }
    AZPoly operator-() const;
    AZPoly operator*(const AZPoly& o) const;
    bool operator==(const AZPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const AZPoly& o) const { return !(*this == o); }

    std::string str() const;
    static AZPoly parse(const std::string& text);

private:
    std::map<Key, Int, KeyOrder> terms_;

    void add_term(int a_exp, int z_exp, const Int& c);
    friend class SkeinElement;
};

// Weakly decreasing sequence of positive integers; the empty partition
// indexes the scalar part of a skein element.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // sorts, checks positivity

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const;                 // sum of parts
    int count() const { return static_cast<int>(parts_.size()); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    int multiplicity(int k) const;

    // Multiset union, re-sorted (the partition product mu . lambda).
    Partition concat(const Partition& o) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    // Order used for "least certificate": total size, then parts
    // lexicographically descending.
    static bool size_lex_less(const Partition& l, const Partition& r);

    std::string str() const;  // e.g. "(3,2,1)" or "()"

private:
    std::vector<int> parts_;
};

// Element of the Kauffman skein module of the solid torus expressed in the
// partition basis: a finite sum  sum_lambda  p_lambda(a,z) * A_lambda.
// Invariant: no zero polynomials stored. The product merges partition keys
// by multiset union, matching the commutative product of the module.
class SkeinElement {
public:
    SkeinElement() = default;
    SkeinElement(Int c) { AZPoly p(std::move(c)); if (!p.is_zero()) terms_[Partition()] = p; }
    SkeinElement(int c) : SkeinElement(Int(c)) {}
    SkeinElement(const AZPoly& scalar) { if (!scalar.is_zero()) terms_[Partition()] = scalar; }

    static SkeinElement basis(Partition lambda, AZPoly coeff = AZPoly(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, AZPoly>& terms() const { return terms_; }
    AZPoly coeff(const Partition& lambda) const;

    // Terms with a-exponent exactly e; the result has all a-exponents 0.
    SkeinElement coeff_a(int e) const;
    // Max a-exponent over all partition coefficients; throws on 0.
    int a_degree() const;

    SkeinElement& operator+=(const SkeinElement& o);
    SkeinElement& operator-=(const SkeinElement& o);
    SkeinElement operator+(const SkeinElement& o) const { SkeinElement r = *this; r += o; return r; }
    SkeinElement operator-(const SkeinElement& o) const { SkeinElement r = *this; r -= o; return r; }
    SkeinElement operator-() const;
    SkeinElement operator*(const SkeinElement& o) const;
    bool operator==(const SkeinElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const SkeinElement& o) const { return !(*this == o); }

    std::string str() const;
    static SkeinElement parse(const std::string& text);

private:
    std::map<Partition, AZPoly> terms_;

    void add_term(const Partition& lambda, const AZPoly& p);
};

// Loop value (a - a^-1)/z + 1 of a disjoint null-homotopic circle.
AZPoly loop_value();

}  // namespace ltorus
