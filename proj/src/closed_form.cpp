#include "ltorus/closed_form.hpp"

#include <algorithm>
#include <functional>

#include "ltorus/errors.hpp"
#include "ltorus/ruling.hpp"

namespace ltorus {

ZPoly bracket(int m) {
    if (m < 0) throw Error("bracket requires m >= 0");
    if (m == 0) return ZPoly::monomial(-2);
    ZPoly r;
    for (int k = 0; k < m; ++k) r += ZPoly::monomial(2 * k, binomial(m + k, 2 * k + 1));
    return r;
}

ZPoly basic_product_ruling_poly(const std::vector<int>& parts) {
    const int n = static_cast<int>(parts.size());
    for (int p : parts)
        if (p < 1) throw Error("parts must be >= 1");
    // backtrack over the above-diagonal entries of a symmetric matrix with
    // zero trace and row sums lambda_i
    std::vector<int> residual = parts;
    ZPoly total;
    std::function<void(int, int, const ZPoly&)> rec = [&](int i, int j, const ZPoly& partial) {
        if (i == n) {
            total += partial;
            return;
        }
        if (j == n) {
            if (residual[i] == 0) rec(i + 1, i + 2, partial);
            return;
        }
        int cap = std::min(residual[i], residual[j]);
        for (int b = 0; b <= cap; ++b) {
            residual[i] -= b;
            residual[j] -= b;
            rec(i, j + 1, partial * bracket(b));
            residual[i] += b;
            residual[j] += b;
        }
    };
    rec(0, 1, ZPoly(1));
    if (total.is_zero()) return total;
    return total * ZPoly::monomial(n * (n - 2));
}

ZPoly basic_product_ruling_poly(const Partition& lambda) {
    return basic_product_ruling_poly(lambda.parts());
}

Int switchless_count(const Partition& mu) {
    Int r = 1;
    for (int k = 1; k <= mu.max_part(); ++k) {
        int m = mu.multiplicity(k);
        if (m % 2 != 0) return 0;
        r *= int_pow(k, m / 2) * odd_double_factorial(m / 2);
    }
    return r;
}

AZPoly psi(const SkeinElement& s) {
    AZPoly out;
    for (const auto& [lambda, coeff] : s.terms())
        out += coeff * AZPoly(basic_product_ruling_poly(lambda));
    return out;
}

ZPoly recover_ruling_poly(const FrontDiagram& d, const Orientation& o, SkeinOptions opts) {
    SkeinElement f = kauffman_F(d, o, opts);
    return psi(f).coeff_a(-tb(d, o));
}

namespace {

// All partitions with parts <= max_part and multiplicities <= max_mult,
// ordered by total size then lexicographically descending parts.
std::vector<Partition> search_box(int max_part, int max_mult) {
    std::vector<Partition> out;
    std::vector<int> mult(max_part + 1, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k > max_part) {
            std::vector<int> parts;
            for (int s = max_part; s >= 1; --s)
                for (int c = 0; c < mult[s]; ++c) parts.push_back(s);
            out.push_back(Partition(parts));
            return;
        }
        for (int c = 0; c <= max_mult; ++c) {
            mult[k] = c;
            rec(k + 1);
        }
        mult[k] = 0;
    };
    rec(1);
    std::sort(out.begin(), out.end(), Partition::size_lex_less);
    return out;
}

}  // namespace

Partition find_certificate(const std::map<Partition, ZPoly>& coeff, const FrontDiagram* diagram) {
    std::map<Partition, ZPoly> support;
    for (const auto& [mu, p] : coeff)
        if (!p.is_zero()) support[mu] = p;
    if (support.empty()) throw NotSharp("the a^(-tb) coefficient vanishes");

    int k = 0;
    bool first = true;
    for (const auto& [mu, p] : support) {
        if (first || p.min_degree() < k) k = p.min_degree();
        first = false;
    }

    int max_part = 1, max_mult = 1;
    std::vector<std::pair<Partition, Int>> low;  // a_mu = p_mu[z^k]
    for (const auto& [mu, p] : support) {
        max_part = std::max(max_part, mu.max_part());
        for (int s = 1; s <= mu.max_part(); ++s) max_mult = std::max(max_mult, mu.multiplicity(s));
        Int a = p.coeff(k);
        if (a != 0) low.emplace_back(mu, a);
    }
    // multiplicities in the box run from 0 to 2m-1 with 2m-1 >= max_mult
    int box_mult = max_mult % 2 == 0 ? max_mult + 1 : max_mult;

    for (const Partition& lambda : search_box(max_part, box_mult)) {
        Int sum = 0;
        for (const auto& [mu, a] : low) sum += a * switchless_count(mu.concat(lambda));
        if (sum != 0) {
            if (diagram) {
                FrontDiagram check = product(*diagram, a_lambda(lambda));
                auto m1 = maslov(check, 1);
                if (!m1 || !has_ruling(check, false, 1, *m1))
                    throw Error("certificate failed the enumeration cross-check");
            }
            return lambda;
        }
    }
    throw Error("certificate search exhausted its box; this contradicts the sharpness theorem");
}

Sharpness sharpness(const FrontDiagram& d, const Orientation& o, SkeinOptions opts) {
    SkeinElement f = kauffman_F(d, o, opts);
    Sharpness s;
    s.tb = tb(d, o);
    s.bound = -f.a_degree();
    s.sharp = s.tb == s.bound;
    if (s.sharp) {
        std::map<Partition, ZPoly> coeff;
        for (const auto& [lambda, p] : f.terms()) {
            ZPoly c = p.coeff_a(-s.tb);
            if (!c.is_zero()) coeff[lambda] = c;
        }
        s.certificate = find_certificate(coeff, &d);
    }
    return s;
}

Int r2_switchless(const Partition& alpha, const Partition& beta) {
    int top = std::max(alpha.max_part(), beta.max_part());
    Int r = 1;
    for (int k = 1; k <= top; ++k) {
        int a = alpha.multiplicity(k);
        if (a != beta.multiplicity(k)) return 0;
        r *= int_pow(k, a) * factorial(a);
    }
    return r;
}

std::pair<Partition, Partition> find_certificate_2graded(
    const std::map<std::pair<Partition, Partition>, ZPoly>& coeff) {
    std::map<std::pair<Partition, Partition>, ZPoly> support;
    for (const auto& [ab, p] : coeff)
        if (!p.is_zero()) support[ab] = p;
    if (support.empty()) throw NotSharp("the a^(-tb) coefficient vanishes");

    int k = 0;
    bool first = true;
    for (const auto& [ab, p] : support) {
        if (first || p.min_degree() < k) k = p.min_degree();
        first = false;
    }

    int max_part = 1, max_mult = 1;
    std::vector<std::pair<std::pair<Partition, Partition>, Int>> low;
    for (const auto& [ab, p] : support) {
        for (const Partition* q : {&ab.first, &ab.second}) {
            max_part = std::max(max_part, q->max_part());
            for (int s = 1; s <= q->max_part(); ++s)
                max_mult = std::max(max_mult, q->multiplicity(s));
        }
        Int b = p.coeff(k);
        if (b != 0) low.emplace_back(ab, b);
    }

    std::vector<Partition> box = search_box(max_part, max_mult);
    std::vector<std::pair<Partition, Partition>> pairs;
    for (const Partition& mu : box)
        for (const Partition& nu : box) pairs.emplace_back(mu, nu);
    std::sort(pairs.begin(), pairs.end(), [](const auto& l, const auto& r) {
        int sl = l.first.size() + l.second.size();
        int sr = r.first.size() + r.second.size();
        if (sl != sr) return sl < sr;
        if (!(l.first == r.first)) return Partition::size_lex_less(l.first, r.first);
        return Partition::size_lex_less(l.second, r.second);
    });

    for (const auto& [mu, nu] : pairs) {
        Int sum = 0;
        for (const auto& [ab, b] : low)
            sum += b * r2_switchless(ab.first.concat(mu), ab.second.concat(nu));
        if (sum != 0) return {mu, nu};
    }
    throw Error("2-graded certificate search exhausted its box");
}

}  // namespace ltorus
