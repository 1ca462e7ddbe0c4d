#include "ltorus/front.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ltorus/errors.hpp"

namespace ltorus {

Tangle to_tangle(const FrontDiagram& d) {
    Tangle t;
    t.seam = d.seam_strands;
    t.events.reserve(d.events.size());
    for (const FrontEvent& e : d.events) {
        TangleKind k = e.type == FrontEventType::Cross     ? TangleKind::Swap
                       : e.type == FrontEventType::LeftCusp ? TangleKind::Birth
                                                            : TangleKind::Death;
        t.events.push_back({k, e.k});
    }
    return t;
}

Validation validate(const FrontDiagram& d) {
    TangleCounts c = tangle_counts(to_tangle(d));
    Validation v;
    v.ok = c.ok;
    v.defect = static_cast<Validation::Defect>(c.defect);
    v.defect_event = c.defect_event;
    v.message = c.message;
    v.strand_table = c.table;
    return v;
}

void require_valid(const FrontDiagram& d) {
    Validation v = validate(d);
    if (!v.ok) throw InvalidDiagram("invalid front diagram: " + v.message);
}

std::string Half::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

ComponentMap components(const FrontDiagram& d) {
    require_valid(d);
    Tangle t = to_tangle(d);
    TangleCounts c = tangle_counts(t);
    Traversal tr = traverse(t, c);
    ComponentMap m;
    m.count = tr.num_components;
    m.comp = tr.comp;
    m.winding_traversal = tr.winding;
    m.cusp_events.assign(tr.num_components, 0);
    for (size_t e = 0; e < t.events.size(); ++e)
        if (t.events[e].kind != TangleKind::Swap) m.cusp_events[tr.cusp_pass[e].component]++;
    return m;
}

int component_count(const FrontDiagram& d) { return components(d).count; }

Orientation default_orientation(const FrontDiagram& d) {
    return Orientation{std::vector<bool>(static_cast<size_t>(component_count(d)), true)};
}

std::optional<Orientation> seam_rightward_orientation(const FrontDiagram& d) {
    Tangle t = to_tangle(d);
    TangleCounts c = tangle_counts(t);
    if (!c.ok) throw InvalidDiagram(c.message);
    Traversal tr = traverse(t, c);
    int seam_iv = t.num_intervals() - 1;
    std::vector<int> dir(tr.num_components, 0);  // 0 unseen, +1 fwd, -1 bwd
    for (int s = 1; s <= c.on_interval(seam_iv); ++s) {
        int comp = tr.comp[seam_iv][s - 1];
        int want = tr.forward[seam_iv][s - 1] ? 1 : -1;
        if (dir[comp] == 0) dir[comp] = want;
        else if (dir[comp] != want) return std::nullopt;
    }
    Orientation o;
    o.rightward.resize(tr.num_components);
    for (int i = 0; i < tr.num_components; ++i) o.rightward[i] = dir[i] >= 0;
    return o;
}

FrontDiagram basic_front(int m) {
    if (m < 1) throw InvalidDiagram("basic front requires m >= 1");
    FrontDiagram d;
    d.seam_strands = m;
    for (int k = 1; k < m; ++k) d.events.push_back({FrontEventType::Cross, k});
    return d;
}

FrontDiagram a_lambda(const Partition& lambda) {
    FrontDiagram d;  // empty diagram is the unit
    for (int part : lambda.parts()) d = product(d, basic_front(part));
    return d;
}

FrontDiagram product(const FrontDiagram& k, const FrontDiagram& l) {
    require_valid(k);
    require_valid(l);
    FrontDiagram d;
    d.seam_strands = k.seam_strands + l.seam_strands;
    d.events = k.events;
    for (FrontEvent e : l.events) {
        e.k += k.seam_strands;
        d.events.push_back(e);
    }
    return d;
}

namespace {

// Direction of a traversal pass under an orientation: +1 toward increasing x.
int oriented_dir(const Traversal::Pass& p, const Orientation& o) {
    return p.forward == o.rightward[p.component] ? 1 : -1;
}

}  // namespace

Orientation product_orientation(const FrontDiagram& k, const Orientation& ok,
                                const FrontDiagram& l, const Orientation& ol) {
    FrontDiagram prod = product(k, l);
    Tangle tp = to_tangle(prod), tk = to_tangle(k), tl = to_tangle(l);
    TangleCounts cp = tangle_counts(tp), ck = tangle_counts(tk), cl = tangle_counts(tl);
    Traversal trp = traverse(tp, cp), trk = traverse(tk, ck), trl = traverse(tl, cl);
    if (static_cast<int>(ok.rightward.size()) != trk.num_components ||
        static_cast<int>(ol.rightward.size()) != trl.num_components)
        throw UnknownComponent("orientation has wrong component count");

    const int Mk = static_cast<int>(k.events.size());
    Orientation out;
    out.rightward.assign(trp.num_components, true);
    std::vector<bool> done(trp.num_components, false);
    for (int m = 0; m < tp.num_intervals() && !prod.events.empty(); ++m) {
        int kcount = m < Mk ? ck.on_interval(m) : k.seam_strands;
        if (k.events.empty()) kcount = k.seam_strands;
        for (int s = 1; s <= cp.on_interval(m); ++s) {
            int c = trp.comp[m][s - 1];
            if (done[c]) continue;
            done[c] = true;
            bool owner_dir;
            if (s <= kcount) {
                int km = k.events.empty() ? 0 : std::min(m, Mk - 1);
                owner_dir = trk.forward[km][s - 1] == ok.rightward[trk.comp[km][s - 1]];
            } else {
                int lm = l.events.empty() ? 0 : (m < Mk ? static_cast<int>(l.events.size()) - 1
                                                        : m - Mk);
                owner_dir =
                    trl.forward[lm][s - kcount - 1] == ol.rightward[trl.comp[lm][s - kcount - 1]];
            }
            out.rightward[c] = trp.forward[m][s - 1] == owner_dir;
        }
    }
    if (prod.events.empty()) {
        // no events anywhere: components are single seam strands in order
        for (int s = 1; s <= prod.seam_strands; ++s)
            out.rightward[s - 1] = s <= k.seam_strands ? ok.rightward[s - 1]
                                                       : ol.rightward[s - k.seam_strands - 1];
    }
    return out;
}

std::pair<FrontDiagram, Orientation> a_lambda_oriented(const Partition& lambda,
                                                       const std::vector<bool>& rightward) {
    if (rightward.size() != lambda.parts().size())
        throw UnknownComponent("one orientation flag per part required");
    FrontDiagram d;
    Orientation o;
    for (size_t i = 0; i < lambda.parts().size(); ++i) {
        FrontDiagram f = basic_front(lambda.parts()[i]);
        Orientation of{{rightward[i]}};
        o = product_orientation(d, o, f, of);
        d = product(d, f);
    }
    return {d, o};
}

int writhe(const FrontDiagram& d, const Orientation& o) {
    require_valid(d);
    Tangle t = to_tangle(d);
    TangleCounts c = tangle_counts(t);
    Traversal tr = traverse(t, c);
    if (static_cast<int>(o.rightward.size()) != tr.num_components)
        throw UnknownComponent("orientation has wrong component count");
    int w = 0;
    for (size_t e = 0; e < t.events.size(); ++e) {
        if (t.events[e].kind != TangleKind::Swap) continue;
        // over strand of a front crossing is the descending one; the crossing
        // is positive exactly when both strands share an x-direction
        w += oriented_dir(tr.desc_pass[e], o) * oriented_dir(tr.asc_pass[e], o);
    }
    return w;
}

int cusp_events(const FrontDiagram& d) {
    int n = 0;
    for (const FrontEvent& e : d.events)
        if (e.type != FrontEventType::Cross) ++n;
    return n;
}

int tb(const FrontDiagram& d, const Orientation& o) {
    return writhe(d, o) - cusp_events(d) / 2;
}

Half rotation(const FrontDiagram& d, const Orientation& o, int component) {
    require_valid(d);
    Tangle t = to_tangle(d);
    TangleCounts c = tangle_counts(t);
    Traversal tr = traverse(t, c);
    if (component < 0 || component >= tr.num_components)
        throw UnknownComponent("no component " + std::to_string(component));
    if (static_cast<int>(o.rightward.size()) != tr.num_components)
        throw UnknownComponent("orientation has wrong component count");
    int down = 0, up = 0;
    for (size_t e = 0; e < t.events.size(); ++e) {
        if (t.events[e].kind == TangleKind::Swap) continue;
        if (tr.cusp_pass[e].component != component) continue;
        bool d_down = tr.cusp_down[e];
        if (!o.rightward[component]) d_down = !d_down;
        (d_down ? down : up)++;
    }
    return Half{down - up};
}

namespace {

// Walks one component from a position, reporting each segment together with
// the running Maslov offset relative to the start (cusp turns shift it).
template <typename Visit>
int walk_component(const Tangle& t, const TangleCounts& c, TanglePos start, Visit visit) {
    TanglePos p = start;
    int level = 0;
    do {
        visit(p, level);
        TanglePos q = tangle_step(t, c, p);
        if (t.events.empty()) break;
        if (q.interval == p.interval && q.forward != p.forward)
            level += q.strand > p.strand ? -1 : 1;  // down-turn lowers the potential
        p = q;
    } while (!(p == start));
    return level;  // net change around the loop, = u - d
}

int mod(int a, int p) {
    int r = a % p;
    return r < 0 ? r + p : r;
}

}  // namespace

std::optional<MaslovPotential> maslov(const FrontDiagram& d, int p,
                                      const std::optional<std::vector<int>>& seam_values) {
    require_valid(d);
    if (p < 1) throw InvalidPotential("modulus must be >= 1");
    Tangle t = to_tangle(d);
    TangleCounts c = tangle_counts(t);
    const int M = t.num_intervals();
    const int seam_iv = M - 1;
    if (seam_values && static_cast<int>(seam_values->size()) != c.on_interval(seam_iv))
        throw InconsistentSeed("seam value count does not match seam strands");

    MaslovPotential mu;
    mu.p = p;
    mu.value.resize(M);
    std::vector<std::vector<int>> rel(M);
    std::vector<std::vector<int>> comp(M);
    for (int m = 0; m < M; ++m) {
        mu.value[m].assign(c.on_interval(m), 0);
        rel[m].assign(c.on_interval(m), 0);
        comp[m].assign(c.on_interval(m), -1);
    }

    int num_components = 0;
    std::vector<int> offset;
    for (int m0 = 0; m0 < M; ++m0) {
        for (int s0 = 1; s0 <= c.on_interval(m0); ++s0) {
            if (comp[m0][s0 - 1] != -1) continue;
            int id = num_components++;
            int net = walk_component(t, c, {m0, s0, true}, [&](TanglePos q, int level) {
                comp[q.interval][q.strand - 1] = id;
                rel[q.interval][q.strand - 1] = level;
            });
            if (mod(net, p) != 0) return std::nullopt;  // p does not divide 2r
            offset.push_back(0);
        }
    }

    if (seam_values) {
        std::vector<bool> pinned(num_components, false);
        for (int s = 1; s <= c.on_interval(seam_iv); ++s) {
            int id = comp[seam_iv][s - 1];
            int want = mod((*seam_values)[s - 1] - rel[seam_iv][s - 1], p);
            if (!pinned[id]) {
                pinned[id] = true;
                offset[id] = want;
            } else if (offset[id] != want) {
                throw InconsistentSeed("seam values conflict along a component");
            }
        }
    }

    for (int m = 0; m < M; ++m)
        for (size_t s = 0; s < mu.value[m].size(); ++s)
            mu.value[m][s] = mod(rel[m][s] + offset[comp[m][s]], p);
    return mu;
}

MaslovPotential maslov_from_orientation(const FrontDiagram& d, const Orientation& o) {
    require_valid(d);
    Tangle t = to_tangle(d);
    TangleCounts c = tangle_counts(t);
    Traversal tr = traverse(t, c);
    if (static_cast<int>(o.rightward.size()) != tr.num_components)
        throw UnknownComponent("orientation has wrong component count");
    MaslovPotential mu;
    mu.p = 2;
    mu.value.resize(t.num_intervals());
    for (int m = 0; m < t.num_intervals(); ++m) {
        mu.value[m].resize(c.on_interval(m));
        for (int s = 1; s <= c.on_interval(m); ++s) {
            bool right = tr.forward[m][s - 1] == o.rightward[tr.comp[m][s - 1]];
            mu.value[m][s - 1] = right ? 0 : 1;
        }
    }
    return mu;
}

// ----------------------------------------------------------------- moves

namespace {

using ET = FrontEventType;

std::string encode(const FrontDiagram& d) {
    std::string s = std::to_string(d.seam_strands) + ";";
    for (const FrontEvent& e : d.events) {
        s += e.type == ET::Cross ? 'c' : e.type == ET::LeftCusp ? 'l' : 'r';
        s += std::to_string(e.k);
        s += ',';
    }
    return s;
}

// Attempts to swap adjacent events e,f (e first) acting on disjoint strand
// ranges, adjusting slot indices across the cusp shifts. Returns (f', e').
std::optional<std::pair<FrontEvent, FrontEvent>> try_commute(FrontEvent e, FrontEvent f) {
    int a = e.k, b = f.k;
    int df = f.type == ET::LeftCusp ? 2 : f.type == ET::RightCusp ? -2 : 0;
    int de = e.type == ET::LeftCusp ? 2 : e.type == ET::RightCusp ? -2 : 0;
    bool above, below;
    if (e.type == ET::RightCusp) {
        if (f.type == ET::LeftCusp) { above = b <= a - 1; below = b >= a; }
        else { above = b + 1 <= a - 1; below = b >= a; }
    } else {
        if (f.type == ET::LeftCusp) { above = b <= a; below = b >= a + 2; }
        else { above = b + 1 < a; below = b > a + 1; }
    }
    if (!above && !below) return std::nullopt;
    FrontEvent nf = f, ne = e;
    if (above) ne.k = a + df;
    else nf.k = b - de;
    if (nf.k < 1 || ne.k < 1) return std::nullopt;
    return std::make_pair(nf, ne);
}

void push_if_valid(std::vector<FrontDiagram>& out, std::set<std::string>& seen,
                   const FrontDiagram& base, FrontDiagram d) {
    if (!validate(d).ok) return;
    if (d == base) return;
    if (seen.insert(encode(d)).second) out.push_back(std::move(d));
}

}  // namespace

std::vector<FrontDiagram> legendrian_moves(const FrontDiagram& d) {
    require_valid(d);
    Tangle t = to_tangle(d);
    TangleCounts c = tangle_counts(t);
    const int M = static_cast<int>(d.events.size());
    std::vector<FrontDiagram> out;
    std::set<std::string> seen;

    // seam rotations
    for (int r = 1; r < M; ++r) {
        FrontDiagram nd;
        nd.seam_strands = c.table[r];
        nd.events.insert(nd.events.end(), d.events.begin() + r, d.events.end());
        nd.events.insert(nd.events.end(), d.events.begin(), d.events.begin() + r);
        push_if_valid(out, seen, d, std::move(nd));
    }

    // zigzag births: a strand grows a pair of cusps and one crossing
    for (int pos = 0; pos <= M; ++pos) {
        int ambient = pos == 0 ? c.on_interval(t.num_intervals() - 1) : c.table[pos];
        for (int i = 1; i <= ambient; ++i) {
            FrontDiagram below = d;
            below.events.insert(below.events.begin() + pos,
                                {{ET::LeftCusp, i + 1}, {ET::Cross, i}, {ET::RightCusp, i + 1}});
            push_if_valid(out, seen, d, std::move(below));
            FrontDiagram above = d;
            above.events.insert(above.events.begin() + pos,
                                {{ET::LeftCusp, i}, {ET::Cross, i + 1}, {ET::RightCusp, i}});
            push_if_valid(out, seen, d, std::move(above));
        }
    }

    // zigzag deaths: the inverse patterns
    for (int pos = 0; pos + 2 < M; ++pos) {
        const FrontEvent &e0 = d.events[pos], &e1 = d.events[pos + 1], &e2 = d.events[pos + 2];
        bool zig_below = e0.type == ET::LeftCusp && e1.type == ET::Cross && e2.type == ET::RightCusp &&
                         e1.k + 1 == e0.k && e2.k == e0.k;
        bool zig_above = e0.type == ET::LeftCusp && e1.type == ET::Cross && e2.type == ET::RightCusp &&
                         e1.k == e0.k + 1 && e2.k == e0.k;
        if (zig_below || zig_above) {
            FrontDiagram nd = d;
            nd.events.erase(nd.events.begin() + pos, nd.events.begin() + pos + 3);
            push_if_valid(out, seen, d, std::move(nd));
        }
    }

    // cusp passages: a strand slides through the mouth of a cusp, trading a
    // bare cusp for the cusp plus two opposite-sign crossings
    for (int pos = 0; pos < M; ++pos) {
        const FrontEvent& e = d.events[pos];
        auto insert_after = [&](FrontEvent a, FrontEvent b, FrontEvent c) {
            FrontDiagram nd = d;
            nd.events[pos] = a;
            nd.events.insert(nd.events.begin() + pos + 1, {b, c});
            push_if_valid(out, seen, d, std::move(nd));
        };
        auto insert_before = [&](FrontEvent a, FrontEvent b, FrontEvent c) {
            FrontDiagram nd = d;
            nd.events[pos] = c;
            nd.events.insert(nd.events.begin() + pos, {a, b});
            push_if_valid(out, seen, d, std::move(nd));
        };
        if (e.type == ET::LeftCusp) {
            insert_after({ET::LeftCusp, e.k + 1}, {ET::Cross, e.k}, {ET::Cross, e.k + 1});
            if (e.k >= 2)
                insert_after({ET::LeftCusp, e.k - 1}, {ET::Cross, e.k}, {ET::Cross, e.k - 1});
        }
        if (e.type == ET::RightCusp) {
            insert_before({ET::Cross, e.k + 1}, {ET::Cross, e.k}, {ET::RightCusp, e.k + 1});
            if (e.k >= 2)
                insert_before({ET::Cross, e.k - 1}, {ET::Cross, e.k}, {ET::RightCusp, e.k - 1});
        }
    }

    // inverse cusp passages: absorb the two crossings back into the cusp
    for (int pos = 0; pos + 2 < M; ++pos) {
        const FrontEvent &e0 = d.events[pos], &e1 = d.events[pos + 1], &e2 = d.events[pos + 2];
        if (e0.type == ET::LeftCusp && e1.type == ET::Cross && e2.type == ET::Cross &&
            e0.k == e2.k && (e1.k == e0.k - 1 || e1.k == e0.k + 1)) {
            FrontDiagram nd = d;
            nd.events[pos] = {ET::LeftCusp, e1.k == e0.k - 1 ? e0.k - 1 : e0.k + 1};
            nd.events.erase(nd.events.begin() + pos + 1, nd.events.begin() + pos + 3);
            push_if_valid(out, seen, d, std::move(nd));
        }
        if (e0.type == ET::Cross && e1.type == ET::Cross && e2.type == ET::RightCusp &&
            e0.k == e2.k && (e1.k == e0.k - 1 || e1.k == e0.k + 1)) {
            FrontDiagram nd = d;
            nd.events[pos] = {ET::RightCusp, e1.k == e0.k - 1 ? e0.k - 1 : e0.k + 1};
            nd.events.erase(nd.events.begin() + pos + 1, nd.events.begin() + pos + 3);
            push_if_valid(out, seen, d, std::move(nd));
        }
    }

    // triple point moves
    for (int pos = 0; pos + 2 < M; ++pos) {
        const FrontEvent &e0 = d.events[pos], &e1 = d.events[pos + 1], &e2 = d.events[pos + 2];
        if (e0.type != ET::Cross || e1.type != ET::Cross || e2.type != ET::Cross) continue;
        if (e0.k != e2.k || (e1.k != e0.k + 1 && e1.k + 1 != e0.k)) continue;
        FrontDiagram nd = d;
        nd.events[pos].k = e1.k;
        nd.events[pos + 1].k = e0.k;
        nd.events[pos + 2].k = e1.k;
        push_if_valid(out, seen, d, std::move(nd));
    }

    // far commutations of adjacent events
    for (int pos = 0; pos + 1 < M; ++pos) {
        if (auto sw = try_commute(d.events[pos], d.events[pos + 1])) {
            FrontDiagram nd = d;
            nd.events[pos] = sw->first;
            nd.events[pos + 1] = sw->second;
            push_if_valid(out, seen, d, std::move(nd));
        }
    }

    return out;
}

FrontDiagram random_front(std::uint64_t seed, int max_events) {
    if (max_events < 0) throw InvalidDiagram("max_events must be >= 0");
    std::mt19937_64 rng(seed);
    if (max_events == 0) return {};
    for (int attempt = 0; attempt < 64; ++attempt) {
        int seam = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(3, max_events) + 1));
        int target = static_cast<int>(rng() % static_cast<std::uint64_t>(max_events + 1));
        FrontDiagram d;
        d.seam_strands = seam;
        int n = seam;
        bool ok = true;
        for (int step = 0; step < target; ++step) {
            int remaining = target - step;
            auto reachable = [&](int after) { return std::abs(after - seam) <= 2 * (remaining - 1); };
            std::vector<FrontEventType> cands;
            if (reachable(n + 2)) cands.push_back(ET::LeftCusp);
            if (n >= 2 && reachable(n)) cands.push_back(ET::Cross);
            if (n >= 2 && reachable(n - 2)) cands.push_back(ET::RightCusp);
            if (cands.empty()) { ok = false; break; }
            FrontEventType ty = cands[rng() % cands.size()];
            int range = ty == ET::LeftCusp ? n + 1 : n - 1;
            int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(range));
            d.events.push_back({ty, k});
            if (ty == ET::LeftCusp) n += 2;
            if (ty == ET::RightCusp) n -= 2;
        }
        if (!ok || n != seam) continue;
        if (validate(d).ok) return d;
    }
    return {};
}

Orientation random_orientation(std::uint64_t seed, const FrontDiagram& d) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    Orientation o;
    int n = component_count(d);
    o.rightward.resize(n);
    for (int i = 0; i < n; ++i) o.rightward[i] = rng() % 2 == 0;
    return o;
}

}  // namespace ltorus
