#include "ltorus/tangle.hpp"

namespace ltorus {

TangleCounts tangle_counts(const Tangle& t) {
    TangleCounts r;
    r.table.reserve(t.events.size() + 1);
    r.table.push_back(t.seam);
    if (t.seam < 0) {
        r.defect = TangleCounts::Defect::NegativeStrandCount;
        r.message = "negative seam strand count";
        return r;
    }
    int n = t.seam;
    for (size_t e = 0; e < t.events.size(); ++e) {
        const TangleEvent& ev = t.events[e];
        if (ev.kind == TangleKind::Death && n < 2) {
            r.defect = TangleCounts::Defect::NegativeStrandCount;
            r.defect_event = static_cast<int>(e);
            r.message = "strand count would drop below zero at event " + std::to_string(e);
            return r;
        }
        bool in_range = true;
        switch (ev.kind) {
            case TangleKind::Swap:
            case TangleKind::Death:
                in_range = ev.k >= 1 && ev.k + 1 <= n;
                break;
            case TangleKind::Birth:
                in_range = ev.k >= 1 && ev.k + 1 <= n + 2;
                break;
        }
        if (!in_range) {
            r.defect = TangleCounts::Defect::EventOutOfRange;
            r.defect_event = static_cast<int>(e);
            r.message = "event " + std::to_string(e) + " out of range";
            return r;
        }
        if (ev.kind == TangleKind::Birth) n += 2;
        if (ev.kind == TangleKind::Death) n -= 2;
        if (n < 0) {
            r.defect = TangleCounts::Defect::NegativeStrandCount;
            r.defect_event = static_cast<int>(e);
            r.message = "negative strand count after event " + std::to_string(e);
            return r;
        }
        r.table.push_back(n);
    }
    if (n != t.seam) {
        r.defect = TangleCounts::Defect::SeamMismatch;
        r.message = "strand count does not close up around the seam";
        return r;
    }
    r.ok = true;
    return r;
}

TanglePos tangle_step(const Tangle& t, const TangleCounts& c, TanglePos p) {
    const int M = static_cast<int>(t.events.size());
    if (M == 0) return p;  // one interval wrapping around the seam
    if (p.forward) {
        int ev = (p.interval + 1) % M;
        const TangleEvent& e = t.events[ev];
        int s = p.strand;
        switch (e.kind) {
            case TangleKind::Swap:
                if (s == e.k) s = e.k + 1;
                else if (s == e.k + 1) s = e.k;
                return {ev, s, true};
            case TangleKind::Birth:
                return {ev, s < e.k ? s : s + 2, true};
            case TangleKind::Death:
                if (s == e.k) return {p.interval, e.k + 1, false};
                if (s == e.k + 1) return {p.interval, e.k, false};
                return {ev, s < e.k ? s : s - 2, true};
        }
    } else {
        int ev = p.interval;
        const TangleEvent& e = t.events[ev];
        int left = (p.interval + M - 1) % M;
        int s = p.strand;
        switch (e.kind) {
            case TangleKind::Swap:
                if (s == e.k) s = e.k + 1;
                else if (s == e.k + 1) s = e.k;
                return {left, s, false};
            case TangleKind::Birth:
                if (s == e.k) return {p.interval, e.k + 1, true};
                if (s == e.k + 1) return {p.interval, e.k, true};
                return {left, s < e.k ? s : s - 2, false};
            case TangleKind::Death:
                return {left, s < e.k ? s : s + 2, false};
        }
    }
    return p;  // unreachable
}

Traversal traverse(const Tangle& t, const TangleCounts& c) {
    const int M = t.num_intervals();
    Traversal tr;
    tr.comp.resize(M);
    tr.order.resize(M);
    tr.forward.resize(M);
    for (int m = 0; m < M; ++m) {
        int n = c.on_interval(m);
        tr.comp[m].assign(n, -1);
        tr.order[m].assign(n, -1);
        tr.forward[m].assign(n, true);
    }
    tr.desc_pass.resize(t.events.size());
    tr.asc_pass.resize(t.events.size());
    tr.cusp_pass.resize(t.events.size());
    tr.cusp_down.resize(t.events.size(), false);

    const int seam_interval = M - 1;
    int order = 0;
    for (int m0 = 0; m0 < M; ++m0) {
        for (int s0 = 1; s0 <= c.on_interval(m0); ++s0) {
            if (tr.comp[m0][s0 - 1] != -1) continue;
            int id = tr.num_components++;
            tr.winding.push_back(0);
            TanglePos p{m0, s0, true};
            do {
                tr.comp[p.interval][p.strand - 1] = id;
                tr.order[p.interval][p.strand - 1] = order;
                tr.forward[p.interval][p.strand - 1] = p.forward;
                if (p.interval == seam_interval) tr.winding[id] += p.forward ? 1 : -1;

                // classify the pass across the upcoming event
                if (!t.events.empty()) {
                    int ev = p.forward ? (p.interval + 1) % M : p.interval;
                    const TangleEvent& e = t.events[ev];
                    Traversal::Pass pass{order, id, p.forward};
                    switch (e.kind) {
                        case TangleKind::Swap:
                            // left slot k / right slot k+1 is the descending strand
                            if (p.forward) {
                                if (p.strand == e.k) tr.desc_pass[ev] = pass;
                                else if (p.strand == e.k + 1) tr.asc_pass[ev] = pass;
                            } else {
                                if (p.strand == e.k + 1) tr.desc_pass[ev] = pass;
                                else if (p.strand == e.k) tr.asc_pass[ev] = pass;
                            }
                            break;
                        case TangleKind::Death:
                            if (p.forward && (p.strand == e.k || p.strand == e.k + 1)) {
                                tr.cusp_pass[ev] = pass;
                                tr.cusp_down[ev] = p.strand == e.k;  // upper to lower
                            }
                            break;
                        case TangleKind::Birth:
                            if (!p.forward && (p.strand == e.k || p.strand == e.k + 1)) {
                                tr.cusp_pass[ev] = pass;
                                tr.cusp_down[ev] = p.strand == e.k;
                            }
                            break;
                    }
                }
                ++order;
                p = tangle_step(t, c, p);
                if (t.events.empty()) break;  // single free segment closes up
            } while (!(p.interval == m0 && p.strand == s0 && p.forward));
        }
    }
    return tr;
}

}  // namespace ltorus
