#pragma once

#include <optional>
#include <vector>

#include "ltorus/algebra.hpp"
#include "ltorus/front.hpp"

namespace ltorus {

// Involution of {1..N}, stored as its image table.
struct Involution {
    std::vector<int> img;  // img[i-1] = value at i, 1-based

    static Involution identity(int n);
    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }
    bool fixes(int i) const { return img[i - 1] == i; }
    bool fixed_point_free() const;
    Involution conj_adjacent(int k) const;  // (k k+1) . rho . (k k+1)

    bool operator==(const Involution& o) const { return img == o.img; }
    bool operator!=(const Involution& o) const { return !(*this == o); }
};

std::vector<Involution> all_involutions(int n, bool fixed_point_free);

// A (generalized) normal ruling: one involution per interval, with the
// convention rho_0 = rho_M carried by the seed on the seam interval.
struct Ruling {
    std::vector<Involution> rho;  // rho[m] acts on interval m, m in [0, M)
    std::vector<int> switches;    // 0-based crossing event indices
    bool generalized = false;
    int p = 1;

    const Involution& seed(int num_intervals) const { return rho[num_intervals - 1]; }
    int j(const FrontDiagram& d) const;  // #switches - #right cusps
};

// Exhaustive, duplicate-free enumeration of the p-graded (generalized)
// normal rulings of d with respect to mu. Throws StrandLimitExceeded when
// some interval carries more than max_strands strands.
std::vector<Ruling> enumerate_rulings(const FrontDiagram& d, bool generalized, int p,
                                      const MaslovPotential& mu, int max_strands = 16);

// Early exit variant of the above.
bool has_ruling(const FrontDiagram& d, bool generalized, int p, const MaslovPotential& mu,
                int max_strands = 16);

ZPoly ruling_polynomial(const FrontDiagram& d, int p, const MaslovPotential& mu,
                        bool generalized = false, int max_strands = 16);

// Canonical-potential convenience: p = 1 always exists; p = 2 uses the
// canonical potential (shift independence makes the choice immaterial).
ZPoly ruling_polynomial(const FrontDiagram& d, int p = 1, bool generalized = false);

// 2-graded polynomial with the orientation-derived potential.
ZPoly ruling_polynomial_oriented(const FrontDiagram& d, const Orientation& o,
                                 bool generalized = false);

// Replays the transition rules of the ruling definition, including the
// normality conditions, switch bookkeeping and the grading constraint.
bool validate_ruling(const FrontDiagram& d, const Ruling& r, const MaslovPotential& mu,
                     std::string* reason = nullptr);

// Decomposition L_rho: the diagram with the switches resolved into parallel
// strands, its components, and the pairing rho induces on them.
struct DecompComponent {
    int winding = 0;         // signed along the resolved traversal
    int top_seam_slot = -1;  // least seam slot, -1 when the component avoids the seam
    int cusps = 0;
    int origin = -1;         // component of d this piece came from
    int partner = -1;        // resolved component paired by rho
};

struct Decomposition {
    FrontDiagram resolved;
    std::vector<DecompComponent> components;
};

Decomposition decompose(const FrontDiagram& d, const Ruling& r);

// Follows the fixed-point strands of a generalized ruling around the diagram
// (turning corners only at switches) and reports their winding numbers as a
// partition. When an orientation is supplied, also reports the orientation
// each product factor A_{lambda_i} must carry to pair with its strand in the
// 2-graded construction (opposite to the fixed strand's own direction).
struct GnrLambda {
    Partition lambda;
    std::vector<bool> factor_rightward;  // aligned with lambda.parts()
};

GnrLambda gnr_to_lambda(const FrontDiagram& d, const Ruling& r,
                        const std::optional<Orientation>& o = std::nullopt);

}  // namespace ltorus
