#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ltorus/algebra.hpp"
#include "ltorus/front.hpp"
#include "ltorus/skein.hpp"

namespace ltorus {

// Ruling polynomial <m> of the square A_m A_m, with <0> = z^-2.
ZPoly bracket(int m);

// Closed form for the ruling polynomial of a product of basic fronts:
//   z^(n(n-2)) * sum over symmetric nonnegative matrices with zero trace and
//   row sums lambda_i of the product of <b_ij> over i < j.
// Accepts any composition; the value only depends on the multiset of parts.
ZPoly basic_product_ruling_poly(const std::vector<int>& parts);
ZPoly basic_product_ruling_poly(const Partition& lambda);

// Number of switchless rulings of A_mu: nonzero only when every part has
// even multiplicity 2a_k, in which case it is prod_k k^(a_k) (2a_k-1)!!.
Int switchless_count(const Partition& mu);

// The specialization sending each basis element A_lambda to the ruling
// polynomial of A_lambda, extended linearly over the coefficient ring.
AZPoly psi(const SkeinElement& s);

// Coefficient of a^(-tb) in psi(F_L): the 1-graded ruling polynomial.
ZPoly recover_ruling_poly(const FrontDiagram& d, const Orientation& o,
                          SkeinOptions opts = {});

// Finds the least partition lambda (by size, then lexicographically
// descending parts) in the finite search box determined by the support of
// coeff such that sum_mu a_mu * C(mu.lambda) is nonzero, where a_mu is the
// lowest z-coefficient. Throws NotSharp when coeff vanishes. When a diagram
// is supplied the certificate is double-checked by ruling enumeration on
// L . A_lambda.
Partition find_certificate(const std::map<Partition, ZPoly>& coeff,
                           const FrontDiagram* diagram = nullptr);

struct Sharpness {
    bool sharp = false;
    int tb = 0;
    int bound = 0;  // -deg_a F
    std::optional<Partition> certificate;
};

Sharpness sharpness(const FrontDiagram& d, const Orientation& o, SkeinOptions opts = {});

// Switchless count of the 2-graded rulings of A_alpha A_{-beta}:
// prod_k delta(a_k, b_k) k^(a_k) a_k!.
Int r2_switchless(const Partition& alpha, const Partition& beta);

// 2-graded certificate search over externally supplied HOMFLY-PT
// coefficient data.
std::pair<Partition, Partition> find_certificate_2graded(
    const std::map<std::pair<Partition, Partition>, ZPoly>& coeff);

}  // namespace ltorus
