#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltorus/algebra.hpp"
#include "ltorus/tangle.hpp"

namespace ltorus {

enum class FrontEventType { Cross, LeftCusp, RightCusp };

struct FrontEvent {
    FrontEventType type;
    int k;  // 1-based top strand of the event (right interval for LeftCusp, left otherwise)

    bool operator==(const FrontEvent& o) const { return type == o.type && k == o.k; }
};

// Annular front diagram: events ordered by increasing x around the circle,
// starting just after the seam x=0. Events must have distinct x-coordinates;
// the list order is that x-order.
struct FrontDiagram {
    int seam_strands = 0;
    std::vector<FrontEvent> events;

    bool operator==(const FrontDiagram& o) const {
        return seam_strands == o.seam_strands && events == o.events;
    }
};

Tangle to_tangle(const FrontDiagram& d);

struct Validation {
    enum class Defect { None, EventOutOfRange, NegativeStrandCount, SeamMismatch };

    bool ok = false;
    Defect defect = Defect::None;
    int defect_event = -1;
    std::string message;
    std::vector<int> strand_table;  // N(0..M), N(0) = seam count
};

Validation validate(const FrontDiagram& d);
void require_valid(const FrontDiagram& d);  // throws InvalidDiagram

// Direction flag per canonical component: true means the component is
// oriented toward increasing x on its first-visited segment.
struct Orientation {
    std::vector<bool> rightward;
};

// Z/p strand labeling, constant through crossings, +1 from lower to upper
// branch at every cusp. Values stored per (interval, strand), reduced mod p.
struct MaslovPotential {
    int p = 1;
    std::vector<std::vector<int>> value;  // [interval][strand-1]

    int at(int interval, int strand) const { return value[interval][strand - 1]; }
};

// Segment-to-component assignment plus the per-component counts derived from
// the canonical traversal.
struct ComponentMap {
    int count = 0;
    std::vector<std::vector<int>> comp;  // [interval][strand-1] -> component id
    std::vector<int> winding_traversal;  // signed along the canonical traversal
    std::vector<int> cusp_events;        // number of cusps per component

    int winding(int component, const Orientation& o) const {
        return o.rightward[component] ? winding_traversal[component]
                                      : -winding_traversal[component];
    }
};

ComponentMap components(const FrontDiagram& d);
int component_count(const FrontDiagram& d);
Orientation default_orientation(const FrontDiagram& d);  // all components rightward

// Orientation making every seam strand point rightward, when one exists.
std::optional<Orientation> seam_rightward_orientation(const FrontDiagram& d);

// Exact half-integer, printed as n or n/2.
struct Half {
    int twice = 0;
    bool operator==(const Half& o) const { return twice == o.twice; }
    std::string str() const;
};

FrontDiagram basic_front(int m);
FrontDiagram a_lambda(const Partition& lambda);
FrontDiagram product(const FrontDiagram& k, const FrontDiagram& l);

// Orientation of product(k, l) agreeing with ok and ol component by
// component (canonical component ids of the product need not line up with
// those of the factors).
Orientation product_orientation(const FrontDiagram& k, const Orientation& ok,
                                const FrontDiagram& l, const Orientation& ol);

// a_lambda with the factor A_{lambda_i} oriented rightward or leftward as
// requested; flags align with lambda.parts().
std::pair<FrontDiagram, Orientation> a_lambda_oriented(const Partition& lambda,
                                                       const std::vector<bool>& rightward);

// Signed crossing count. The sign convention makes every crossing of a
// rightward-oriented basic front positive: a front crossing is positive
// exactly when its two strands point in the same x-direction.
int writhe(const FrontDiagram& d, const Orientation& o);
int cusp_events(const FrontDiagram& d);
int tb(const FrontDiagram& d, const Orientation& o);
Half rotation(const FrontDiagram& d, const Orientation& o, int component);

// A Z/p Maslov potential, or nullopt when none exists (p must divide 2r on
// every component). Default normalization assigns 0 to the first-visited
// segment of each component; explicit seam values pin components instead.
std::optional<MaslovPotential> maslov(const FrontDiagram& d, int p,
                                      const std::optional<std::vector<int>>& seam_values = std::nullopt);
MaslovPotential maslov_from_orientation(const FrontDiagram& d, const Orientation& o);

// All diagrams one Legendrian Reidemeister move away: cusp passages, triple
// point moves, stabilization-free zigzag births/deaths, far commutations of
// adjacent events, and seam rotations.
std::vector<FrontDiagram> legendrian_moves(const FrontDiagram& d);

FrontDiagram random_front(std::uint64_t seed, int max_events);
Orientation random_orientation(std::uint64_t seed, const FrontDiagram& d);

}  // namespace ltorus
