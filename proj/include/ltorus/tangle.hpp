#pragma once

#include <string>
#include <vector>

namespace ltorus {

// Shared combinatorial engine for annular Morse-style diagrams: a seam strand
// count plus a cyclic word of events, each acting on adjacent strand slots.
// Front diagrams (crossing / left cusp / right cusp) and smooth diagrams
// (crossing / cup / cap) both lower to this representation.
//
// Indexing conventions, used throughout the project:
//  - events are 0-based, in increasing x starting just after the seam;
//  - interval m (0-based, m in [0,M)) lies to the right of event m; the seam
//    x=0 is inside interval M-1; an event-free diagram has one interval 0;
//  - strands on an interval are numbered 1..N from top to bottom.

enum class TangleKind { Swap, Birth, Death };

struct TangleEvent {
    TangleKind kind;
    int k;  // 1-based top strand slot of the event
};

struct Tangle {
    int seam = 0;
    std::vector<TangleEvent> events;

    int num_intervals() const { return events.empty() ? 1 : static_cast<int>(events.size()); }
};

struct TangleCounts {
    enum class Defect { None, EventOutOfRange, NegativeStrandCount, SeamMismatch };

    bool ok = false;
    Defect defect = Defect::None;
    int defect_event = -1;  // 0-based index of the offending event
    std::string message;

    // table[0] = seam count, table[m] = strand count just after event m-1.
    std::vector<int> table;

    // Count on 0-based interval m (table closed up around the seam).
    int on_interval(int m) const { return table[m + 1 == static_cast<int>(table.size()) ? 0 : m + 1]; }
};

TangleCounts tangle_counts(const Tangle& t);

// A point of the diagram in transit: which segment, and direction of travel.
struct TanglePos {
    int interval;  // 0-based
    int strand;    // 1-based
    bool forward;  // true = moving toward increasing x

    bool operator==(const TanglePos& o) const {
        return interval == o.interval && strand == o.strand && forward == o.forward;
    }
};

// One step of curve traversal: crosses the next event (or the seam), turning
// around at cusps.
TanglePos tangle_step(const Tangle& t, const TangleCounts& c, TanglePos p);

// Full canonical traversal. Components are discovered by scanning segments in
// (interval, strand) lexicographic order and walked forward from their first
// segment, so identifiers and visit orders are reproducible.
struct Traversal {
    struct Pass {
        int order = -1;      // global visit order of the pass
        int component = -1;
        bool forward = true; // direction of travel at the pass
    };

    int num_components = 0;
    std::vector<std::vector<int>> comp;      // [interval][strand-1] -> component id
    std::vector<std::vector<int>> order;     // [interval][strand-1] -> global visit order
    std::vector<std::vector<bool>> forward;  // [interval][strand-1] -> direction of travel
    std::vector<int> winding;                // per component, signed along traversal

    // Swap events: the descending strand enters the crossing at slot k on the
    // left, the ascending strand at slot k+1.
    std::vector<Pass> desc_pass, asc_pass;   // indexed by event

    // Birth/Death events: the single pass through the cusp point.
    // cusp_down is true when the traversal moves from the upper branch to the
    // lower one.
    std::vector<Pass> cusp_pass;
    std::vector<bool> cusp_down;
};

Traversal traverse(const Tangle& t, const TangleCounts& c);

}  // namespace ltorus
