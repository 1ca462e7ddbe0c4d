#pragma once

#include <set>
#include <string>
#include <vector>

#include "ltorus/front.hpp"
#include "ltorus/ruling.hpp"

namespace ltorus {

// Word in the free unital Z/2-algebra on the generators; empty word = 1.
using Word = std::vector<int>;

// F2 linear combination of words; set semantics performs the cancellation.
struct AlgebraElement {
    std::set<Word> words;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return {{Word{}}}; }
    static AlgebraElement gen(int id) { return {{Word{id}}}; }

    bool is_zero() const { return words.empty(); }
    void toggle(const Word& w);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    bool operator==(const AlgebraElement& o) const { return words == o.words; }
};

struct DgaGenerator {
    enum class Kind { X, Y, Crossing, RightCusp };

    Kind kind;
    int m = -1;        // splash index, X/Y only
    int i = 0, j = 0;  // 1-based matrix position, X/Y only
    int event = -1;    // 0-based event index, Crossing/RightCusp only
    int degree = 0;    // reduced mod p

    std::string name() const;
};

// The Chekanov-Eliashberg algebra of the resolved front with splashes: one
// splash per interval (the seam splash doubles as the resolution loop), two
// strictly upper triangular matrices of generators per splash, one generator
// per crossing and right cusp, differential in matrix form.
struct Dga {
    FrontDiagram diagram;
    MaslovPotential mu;
    int p = 1;
    int splashes = 1;  // max(1, #events)

    std::vector<DgaGenerator> gens;
    std::vector<AlgebraElement> diff;            // per generator id
    std::vector<std::vector<std::vector<int>>> xid, yid;  // [m][i-1][j-1] -> id or -1
    std::vector<int> event_gen;                  // event -> crossing/cusp id or -1

    int x(int m, int i, int j) const { return xid[m][i - 1][j - 1]; }
    int y(int m, int i, int j) const { return yid[m][i - 1][j - 1]; }
    int strands(int m) const { return static_cast<int>(xid[m].size()); }
};

Dga build_dga(const FrontDiagram& d, const MaslovPotential& mu);

struct StructureReport {
    bool ok = true;
    std::string offender;
    std::string reason;
};

// Verifies d^2 = 0 and that the differential drops degree by exactly 1 mod p,
// generator by generator.
StructureReport check_structure(const Dga& g);

struct Augmentation {
    std::vector<std::uint8_t> value;  // per generator id

    bool operator==(const Augmentation& o) const { return value == o.value; }
};

// eps(d q) = 0 for every generator plus the grading condition
// eps(q) != 0 => |q| = 0 mod p.
bool is_augmentation(const Dga& g, const Augmentation& eps, int p);

// The augmentation induced by a p-graded generalized normal ruling:
// eps(Y_m) = B_{rho_m}, switches augment their crossing and the x-generators
// at the splash immediately to the right.
Augmentation augmentation_from_gnr(const Dga& g, const Ruling& r);

// Barannikov pairings of the matrices eps(Y_m), assembled and validated as a
// generalized normal ruling.
Ruling gnr_from_augmentation(const Dga& g, const Augmentation& eps);

// Exhaustive search over F2 assignments of the degree-0 generators (all
// generators when p = 1); the rest are forced to zero by gradedness.
std::vector<Augmentation> brute_force_augmentations(const Dga& g, int p, int limit = 22);
bool has_augmentation(const Dga& g, int p, int limit = 22);
int count_free_generators(const Dga& g, int p);

}  // namespace ltorus
