#pragma once

#include <vector>

#include "ltorus/algebra.hpp"
#include "ltorus/front.hpp"

namespace ltorus {

enum class OverStrand { Descending, Ascending };

struct SmoothEvent {
    enum class Type { Cup, Cap, Cross };

    Type type;
    int k;
    OverStrand over = OverStrand::Descending;  // meaningful for Cross only

    bool operator==(const SmoothEvent& o) const {
        return type == o.type && k == o.k && (type != Type::Cross || over == o.over);
    }
};

// Regular-isotopy diagram of an unoriented link in the annulus, same event
// conventions as FrontDiagram.
struct SmoothDiagram {
    int seam_strands = 0;
    std::vector<SmoothEvent> events;

    bool operator==(const SmoothDiagram& o) const {
        return seam_strands == o.seam_strands && events == o.events;
    }
};

Tangle to_tangle(const SmoothDiagram& d);
Validation validate(const SmoothDiagram& d);

// Cusps smooth into cups/caps; at every front crossing the strand descending
// through the crossing has the lesser slope and goes on top.
SmoothDiagram from_front(const FrontDiagram& d);

struct SkeinOptions {
    long long budget = 1'000'000;  // recursion node limit
};

// Class of the diagram in the Kauffman skein module of the solid torus,
// expressed in the partition basis. Resolves crossings recursively toward
// descending diagrams, which evaluate componentwise.
SkeinElement kauffman_D(const SmoothDiagram& s, SkeinOptions opts = {});

// Writhe-normalized invariant a^(-w) D of an oriented Legendrian front.
SkeinElement kauffman_F(const FrontDiagram& d, const Orientation& o, SkeinOptions opts = {});

// The Thurston-Bennequin estimate -deg_a F.
int tb_upper_bound(const FrontDiagram& d, const Orientation& o, SkeinOptions opts = {});

int writhe(const SmoothDiagram& d, const Orientation& o);

// Test helpers for the regular-isotopy suites.
// Inserts a cancelling pair of crossings between strands k, k+1 at event
// list position pos; first_desc_over picks which strand slides on top.
SmoothDiagram insert_r2(const SmoothDiagram& d, int pos, int k, bool first_desc_over);
// Rewrites a triple-point pattern cross(k) cross(k') cross(k), |k-k'| = 1,
// starting at event position pos; returns false if the pattern is absent.
bool apply_r3(SmoothDiagram& d, int pos);

}  // namespace ltorus
