#include "ltorus/skein.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "ltorus/errors.hpp"

namespace ltorus {

Tangle to_tangle(const SmoothDiagram& d) {
    Tangle t;
    t.seam = d.seam_strands;
    t.events.reserve(d.events.size());
    for (const SmoothEvent& e : d.events) {
        TangleKind k = e.type == SmoothEvent::Type::Cross ? TangleKind::Swap
                       : e.type == SmoothEvent::Type::Cup ? TangleKind::Birth
                                                          : TangleKind::Death;
        t.events.push_back({k, e.k});
    }
    return t;
}

Validation validate(const SmoothDiagram& d) {
    TangleCounts c = tangle_counts(to_tangle(d));
    Validation v;
    v.ok = c.ok;
    v.defect = static_cast<Validation::Defect>(c.defect);
    v.defect_event = c.defect_event;
    v.message = c.message;
    v.strand_table = c.table;
    return v;
}

SmoothDiagram from_front(const FrontDiagram& d) {
    require_valid(d);
    SmoothDiagram s;
    s.seam_strands = d.seam_strands;
    s.events.reserve(d.events.size());
    for (const FrontEvent& e : d.events) {
        switch (e.type) {
            case FrontEventType::Cross:
                s.events.push_back({SmoothEvent::Type::Cross, e.k, OverStrand::Descending});
                break;
            case FrontEventType::LeftCusp:
                s.events.push_back({SmoothEvent::Type::Cup, e.k});
                break;
            case FrontEventType::RightCusp:
                s.events.push_back({SmoothEvent::Type::Cap, e.k});
                break;
        }
    }
    return s;
}

int writhe(const SmoothDiagram& d, const Orientation& o) {
    Tangle t = to_tangle(d);
    TangleCounts c = tangle_counts(t);
    if (!c.ok) throw InvalidDiagram(c.message);
    Traversal tr = traverse(t, c);
    if (static_cast<int>(o.rightward.size()) != tr.num_components)
        throw UnknownComponent("orientation has wrong component count");
    auto dir = [&](const Traversal::Pass& p) {
        return p.forward == o.rightward[p.component] ? 1 : -1;
    };
    int w = 0;
    for (size_t e = 0; e < d.events.size(); ++e) {
        if (d.events[e].type != SmoothEvent::Type::Cross) continue;
        int s = dir(tr.desc_pass[e]) * dir(tr.asc_pass[e]);
        w += d.events[e].over == OverStrand::Descending ? s : -s;
    }
    return w;
}

SmoothDiagram insert_r2(const SmoothDiagram& d, int pos, int k, bool first_desc_over) {
    SmoothDiagram out = d;
    OverStrand o1 = first_desc_over ? OverStrand::Descending : OverStrand::Ascending;
    OverStrand o2 = first_desc_over ? OverStrand::Ascending : OverStrand::Descending;
    out.events.insert(out.events.begin() + pos,
                      {{SmoothEvent::Type::Cross, k, o1}, {SmoothEvent::Type::Cross, k, o2}});
    return out;
}

bool apply_r3(SmoothDiagram& d, int pos) {
    if (pos + 2 >= static_cast<int>(d.events.size())) return false;
    SmoothEvent &e0 = d.events[pos], &e1 = d.events[pos + 1], &e2 = d.events[pos + 2];
    if (e0.type != SmoothEvent::Type::Cross || e1.type != SmoothEvent::Type::Cross ||
        e2.type != SmoothEvent::Type::Cross)
        return false;
    if (e0.k != e2.k || (e1.k != e0.k + 1 && e1.k + 1 != e0.k)) return false;
    // slide the outer strand across the crossing: indices swap, the over/under
    // data of each strand pair is carried along
    SmoothEvent n0{SmoothEvent::Type::Cross, e1.k, e2.over};
    SmoothEvent n1{SmoothEvent::Type::Cross, e0.k, e1.over};
    SmoothEvent n2{SmoothEvent::Type::Cross, e1.k, e0.over};
    e0 = n0;
    e1 = n1;
    e2 = n2;
    return true;
}

namespace {

std::string encode(const SmoothDiagram& d) {
    std::string s = std::to_string(d.seam_strands);
    s += ';';
    for (const SmoothEvent& e : d.events) {
        switch (e.type) {
            case SmoothEvent::Type::Cup: s += 'u'; break;
            case SmoothEvent::Type::Cap: s += 'n'; break;
            case SmoothEvent::Type::Cross:
                s += e.over == OverStrand::Descending ? 'd' : 'a';
                break;
        }
        s += std::to_string(e.k);
        s += ',';
    }
    return s;
}

// Rotation-normalized key: the seam is bookkeeping, the skein class is not
// allowed to depend on where the diagram was cut open.
std::string canonical_key(const SmoothDiagram& d, const TangleCounts& c) {
    std::string best = encode(d);
    const int M = static_cast<int>(d.events.size());
    for (int r = 1; r < M; ++r) {
        SmoothDiagram rot;
        rot.seam_strands = c.table[r];
        rot.events.insert(rot.events.end(), d.events.begin() + r, d.events.end());
        rot.events.insert(rot.events.end(), d.events.begin(), d.events.begin() + r);
        std::string k = encode(rot);
        if (k < best) best = k;
    }
    return best;
}

struct Evaluator {
    long long budget;
    std::unordered_map<std::string, SkeinElement> memo;

    SkeinElement eval(const SmoothDiagram& d) {
        if (--budget < 0) throw BudgetExceeded("skein recursion node limit exceeded");
        Tangle t = to_tangle(d);
        TangleCounts c = tangle_counts(t);
        std::string key = canonical_key(d, c);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        Traversal tr = traverse(t, c);

        // first bad crossing in traversal order, if any
        int bad = -1;
        int bad_order = 0;
        for (size_t e = 0; e < d.events.size(); ++e) {
            if (d.events[e].type != SmoothEvent::Type::Cross) continue;
            const auto& dp = tr.desc_pass[e];
            const auto& ap = tr.asc_pass[e];
            bool first_is_desc = dp.order < ap.order;
            bool good = first_is_desc == (d.events[e].over == OverStrand::Descending);
            if (good) continue;
            int order = std::min(dp.order, ap.order);
            if (bad == -1 || order < bad_order) {
                bad = static_cast<int>(e);
                bad_order = order;
            }
        }

        SkeinElement value;
        if (bad == -1) {
            value = descending_value(d, tr);
        } else {
            const SmoothEvent ev = d.events[bad];

            SmoothDiagram switched = d;
            switched.events[bad].over = ev.over == OverStrand::Descending
                                            ? OverStrand::Ascending
                                            : OverStrand::Descending;

            SmoothDiagram smooth_id = d;
            smooth_id.events.erase(smooth_id.events.begin() + bad);

            SmoothDiagram smooth_turn = d;
            smooth_turn.events[bad] = {SmoothEvent::Type::Cap, ev.k};
            smooth_turn.events.insert(smooth_turn.events.begin() + bad + 1,
                                      {SmoothEvent::Type::Cup, ev.k});

            // D(desc over) - D(asc over) = z ( D(identity) - D(turnback) )
            SkeinElement z(AZPoly::monomial(0, 1));
            SkeinElement delta = z * (eval(smooth_id) - eval(smooth_turn));
            value = ev.over == OverStrand::Descending ? eval(switched) + delta
                                                      : eval(switched) - delta;
        }
        memo.emplace(std::move(key), value);
        return value;
    }

    // A descending diagram splits into stacked components: a winding-m piece
    // with self-writhe w contributes a^(w-(|m|-1)) A_|m|, a null-homotopic one
    // a^w times the loop value. Crossings between distinct components vanish
    // under regular isotopy.
    SkeinElement descending_value(const SmoothDiagram& d, const Traversal& tr) {
        std::vector<int> self_writhe(tr.num_components, 0);
        for (size_t e = 0; e < d.events.size(); ++e) {
            if (d.events[e].type != SmoothEvent::Type::Cross) continue;
            const auto& dp = tr.desc_pass[e];
            const auto& ap = tr.asc_pass[e];
            if (dp.component != ap.component) continue;
            int s = (dp.forward ? 1 : -1) * (ap.forward ? 1 : -1);
            self_writhe[dp.component] += d.events[e].over == OverStrand::Descending ? s : -s;
        }
        SkeinElement value(1);
        for (int comp = 0; comp < tr.num_components; ++comp) {
            int m = std::abs(tr.winding[comp]);
            if (m == 0) {
                value = value * SkeinElement(AZPoly::monomial(self_writhe[comp], 0) * loop_value());
            } else {
                AZPoly coeff = AZPoly::monomial(self_writhe[comp] - (m - 1), 0);
                value = value * SkeinElement::basis(Partition({m}), coeff);
            }
        }
        return value;
    }
};

}  // namespace

SkeinElement kauffman_D(const SmoothDiagram& s, SkeinOptions opts) {
    Validation v = validate(s);
    if (!v.ok) throw InvalidDiagram("invalid smooth diagram: " + v.message);
    Evaluator ev{opts.budget, {}};
    return ev.eval(s);
}

SkeinElement kauffman_F(const FrontDiagram& d, const Orientation& o, SkeinOptions opts) {
    require_valid(d);
    int w = writhe(d, o);
    return SkeinElement(AZPoly::monomial(-w, 0)) * kauffman_D(from_front(d), opts);
}

int tb_upper_bound(const FrontDiagram& d, const Orientation& o, SkeinOptions opts) {
    return -kauffman_F(d, o, opts).a_degree();
}

}  // namespace ltorus
