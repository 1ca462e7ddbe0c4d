#include "ltorus/ruling.hpp"

#include <algorithm>

#include "ltorus/errors.hpp"

namespace ltorus {

Involution Involution::identity(int n) {
    Involution v;
    v.img.resize(n);
    for (int i = 1; i <= n; ++i) v.img[i - 1] = i;
    return v;
}

bool Involution::fixed_point_free() const {
    for (int i = 1; i <= n(); ++i)
        if (img[i - 1] == i) return false;
    return true;
}

Involution Involution::conj_adjacent(int k) const {
    auto t = [k](int i) { return i == k ? k + 1 : i == k + 1 ? k : i; };
    Involution out;
    out.img.resize(n());
    for (int i = 1; i <= n(); ++i) out.img[t(i) - 1] = t(img[i - 1]);
    return out;
}

std::vector<Involution> all_involutions(int n, bool fixed_point_free) {
    std::vector<Involution> out;
    Involution cur;
    cur.img.assign(n, 0);
    auto rec = [&](auto&& self, int) -> void {
        int i = 0;
        while (i < n && cur.img[i] != 0) ++i;
        if (i == n) {
            out.push_back(cur);
            return;
        }
        if (!fixed_point_free) {
            cur.img[i] = i + 1;
            self(self, 0);
            cur.img[i] = 0;
        }
        for (int j = i + 1; j < n; ++j) {
            if (cur.img[j] != 0) continue;
            cur.img[i] = j + 1;
            cur.img[j] = i + 1;
            self(self, 0);
            cur.img[i] = cur.img[j] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

int Ruling::j(const FrontDiagram& d) const {
    int rc = 0;
    for (const FrontEvent& e : d.events)
        if (e.type == FrontEventType::RightCusp) ++rc;
    return static_cast<int>(switches.size()) - rc;
}

namespace {

Involution left_cusp_image(const Involution& cur, int k) {
    int n = cur.n();
    auto io = [k](int i) { return i < k ? i : i + 2; };
    Involution out;
    out.img.resize(n + 2);
    for (int i = 1; i <= n; ++i) out.img[io(i) - 1] = io(cur(i));
    out.img[k - 1] = k + 1;
    out.img[k] = k;
    return out;
}

Involution right_cusp_image(const Involution& cur, int k) {
    int n = cur.n();
    auto io = [k](int i) { return i < k ? i : i - 2; };
    Involution out;
    out.img.resize(n - 2);
    for (int i = 1; i <= n; ++i) {
        if (i == k || i == k + 1) continue;
        out.img[io(i) - 1] = io(cur(i));
    }
    return out;
}

// Normality: of the six configurations of switching strands and their
// companions only three are allowed; with exactly one fixed strand (the
// generalized case) two configurations are allowed.
bool switch_allowed(const Involution& rho, int k, bool generalized) {
    int rk = rho(k), rk1 = rho(k + 1);
    bool fk = rk == k, fk1 = rk1 == k + 1;
    if (fk && fk1) return false;  // both fixed: never a switch
    if (fk || fk1) {
        if (!generalized) return false;
        return fk ? rk1 > k + 1 : rk < k;
    }
    if (rk1 < rk && rk < k) return true;
    if (rk < k && rk1 > k + 1) return true;
    if (rk1 > k + 1 && rk > rk1) return true;
    return false;
}

struct EnumCtx {
    const FrontDiagram& d;
    const MaslovPotential& mu;
    int p;
    bool generalized;
    TangleCounts counts;
    int M;     // number of events
    int root;  // interval carrying the seed involutions
};

bool seed_graded(const EnumCtx& cx, const Involution& s) {
    for (int i = 1; i <= s.n(); ++i) {
        int j = s(i);
        if (i < j && cx.mu.at(cx.root, i) != (cx.mu.at(cx.root, j) + 1) % cx.p)
            return false;
    }
    return true;
}

// Depth-first construction of all rulings from one seed on the root interval,
// working once around the circle. Returns false when the sink asks to stop.
template <typename Sink>
bool enum_from_seed(const EnumCtx& cx, const Involution& seed, Sink&& sink) {
    std::vector<Involution> rho(cx.M == 0 ? 1 : cx.M);
    std::vector<int> switches;
    auto emit = [&]() {
        Ruling r;
        r.rho = rho;
        std::sort(switches.begin(), switches.end());
        r.switches = switches;
        r.generalized = cx.generalized;
        r.p = cx.p;
        return sink(std::move(r));
    };
    if (cx.M == 0) {
        rho[0] = seed;
        return emit();
    }
    rho[cx.root] = seed;
    auto rec = [&](auto&& self, int step, const Involution& cur) -> bool {
        if (step == cx.M) return cur == seed ? emit() : true;
        int e = (cx.root + 1 + step) % cx.M;  // event to the right of the current interval
        const FrontEvent& ev = cx.d.events[e];
        int left_iv = (e - 1 + cx.M) % cx.M;
        switch (ev.type) {
            case FrontEventType::LeftCusp:
                rho[e] = left_cusp_image(cur, ev.k);
                return self(self, step + 1, rho[e]);
            case FrontEventType::RightCusp:
                if (cur(ev.k) != ev.k + 1) return true;  // dead end
                rho[e] = right_cusp_image(cur, ev.k);
                return self(self, step + 1, rho[e]);
            case FrontEventType::Cross: {
                if (cur(ev.k) == ev.k + 1) return true;  // paired strands may not cross
                rho[e] = cur.conj_adjacent(ev.k);
                if (!self(self, step + 1, rho[e])) return false;
                if (switch_allowed(cur, ev.k, cx.generalized) &&
                    cx.mu.at(left_iv, ev.k) == cx.mu.at(left_iv, ev.k + 1)) {
                    rho[e] = cur;
                    switches.push_back(e);
                    bool cont = self(self, step + 1, rho[e]);
                    switches.pop_back();
                    if (!cont) return false;
                }
                return true;
            }
        }
        return true;
    };
    return rec(rec, 0, seed);
}

template <typename Sink>
void enumerate_core(const FrontDiagram& d, bool generalized, int p, const MaslovPotential& mu,
                    int max_strands, Sink&& sink) {
    require_valid(d);
    if (p < 1) throw InvalidPotential("modulus must be >= 1");
    if (mu.p != p) throw InvalidPotential("potential modulus does not match p");
    Tangle t = to_tangle(d);
    TangleCounts counts = tangle_counts(t);
    for (int n : counts.table)
        if (n > max_strands)
            throw StrandLimitExceeded("strand count " + std::to_string(n) + " exceeds limit " +
                                      std::to_string(max_strands));
    // root the search at a narrowest interval; the seed space is smallest there
    int root = t.num_intervals() - 1;
    for (int m = 0; m < t.num_intervals(); ++m)
        if (counts.on_interval(m) < counts.on_interval(root)) root = m;
    EnumCtx cx{d, mu, p, generalized, counts, static_cast<int>(d.events.size()), root};
    int n0 = counts.on_interval(cx.root);
    for (const Involution& seed : all_involutions(n0, !generalized)) {
        if (!seed_graded(cx, seed)) continue;
        if (!enum_from_seed(cx, seed, sink)) return;
    }
}

}  // namespace

std::vector<Ruling> enumerate_rulings(const FrontDiagram& d, bool generalized, int p,
                                      const MaslovPotential& mu, int max_strands) {
    std::vector<Ruling> out;
    enumerate_core(d, generalized, p, mu, max_strands, [&](Ruling&& r) {
        out.push_back(std::move(r));
        return true;
    });
    return out;
}

bool has_ruling(const FrontDiagram& d, bool generalized, int p, const MaslovPotential& mu,
                int max_strands) {
    bool found = false;
    enumerate_core(d, generalized, p, mu, max_strands, [&](Ruling&&) {
        found = true;
        return false;
    });
    return found;
}

ZPoly ruling_polynomial(const FrontDiagram& d, int p, const MaslovPotential& mu,
                        bool generalized, int max_strands) {
    ZPoly r;
    enumerate_core(d, generalized, p, mu, max_strands, [&](Ruling&& rl) {
        r += ZPoly::monomial(rl.j(d));
        return true;
    });
    return r;
}

ZPoly ruling_polynomial(const FrontDiagram& d, int p, bool generalized) {
    auto mu = maslov(d, p);
    if (!mu) throw InvalidPotential("no Z/" + std::to_string(p) + " Maslov potential exists");
    return ruling_polynomial(d, p, *mu, generalized);
}

ZPoly ruling_polynomial_oriented(const FrontDiagram& d, const Orientation& o, bool generalized) {
    return ruling_polynomial(d, 2, maslov_from_orientation(d, o), generalized);
}

bool validate_ruling(const FrontDiagram& d, const Ruling& r, const MaslovPotential& mu,
                     std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    Validation v = validate(d);
    if (!v.ok) return fail("invalid diagram");
    Tangle t = to_tangle(d);
    TangleCounts counts = tangle_counts(t);
    const int M = static_cast<int>(d.events.size());
    const int intervals = t.num_intervals();
    if (static_cast<int>(r.rho.size()) != intervals) return fail("wrong number of involutions");
    for (int m = 0; m < intervals; ++m) {
        if (r.rho[m].n() != counts.on_interval(m)) return fail("involution size mismatch");
        for (int i = 1; i <= r.rho[m].n(); ++i) {
            int j = r.rho[m](i);
            if (j < 1 || j > r.rho[m].n() || r.rho[m](j) != i) return fail("not an involution");
            if (!r.generalized && j == i) return fail("fixed point in a normal ruling");
            if (i < j && mu.at(m, i) != (mu.at(m, j) + 1) % mu.p)
                return fail("pairing violates the grading");
        }
    }
    std::vector<bool> is_switch(std::max(M, 1), false);
    for (int s : r.switches) {
        if (s < 0 || s >= M || d.events[s].type != FrontEventType::Cross)
            return fail("switch index is not a crossing");
        is_switch[s] = true;
    }
    for (int e = 0; e < M; ++e) {
        const Involution& prev = r.rho[(e - 1 + M) % M];
        const Involution& next = r.rho[e];
        const FrontEvent& ev = d.events[e];
        switch (ev.type) {
            case FrontEventType::LeftCusp:
                if (!(next == left_cusp_image(prev, ev.k))) return fail("left cusp rule violated");
                break;
            case FrontEventType::RightCusp:
                if (prev(ev.k) != ev.k + 1) return fail("right cusp requires the dying pair");
                if (!(next == right_cusp_image(prev, ev.k))) return fail("right cusp rule violated");
                break;
            case FrontEventType::Cross: {
                if (prev(ev.k) == ev.k + 1) return fail("paired strands may not cross");
                bool both_fixed = prev.fixes(ev.k) && prev.fixes(ev.k + 1);
                if (is_switch[e]) {
                    if (both_fixed) return fail("crossing of two fixed strands marked as switch");
                    if (!(next == prev)) return fail("switch must keep the involution");
                    if (!switch_allowed(prev, ev.k, r.generalized)) return fail("normality violated");
                } else {
                    if (!(next == prev.conj_adjacent(ev.k))) return fail("crossing rule violated");
                    if (!both_fixed && next == prev)
                        return fail("unmarked switch");  // conj equals prev only when both fixed
                }
                break;
            }
        }
    }
    return true;
}

Decomposition decompose(const FrontDiagram& d, const Ruling& r) {
    {
        MaslovPotential trivial;
        auto m1 = maslov(d, 1);
        Ruling ungraded = r;
        ungraded.p = 1;
        std::string why;
        if (!m1 || !validate_ruling(d, ungraded, *m1, &why))
            throw InvalidDiagram("not a ruling of the diagram: " + why);
    }
    const int M = static_cast<int>(d.events.size());
    std::vector<bool> is_switch(std::max(M, 1), false);
    for (int s : r.switches) is_switch[s] = true;

    Decomposition out;
    out.resolved.seam_strands = d.seam_strands;
    std::vector<int> rmap(std::max(M, 1), 0);  // original interval -> resolved interval
    {
        int kept = 0;
        std::vector<int> kept_upto(std::max(M, 1), -1);
        for (int e = 0; e < M; ++e) {
            if (!is_switch[e]) {
                out.resolved.events.push_back(d.events[e]);
                ++kept;
            }
            kept_upto[e] = kept - 1;  // resolved index of last kept event <= e
        }
        int total_kept = kept;
        for (int m = 0; m < std::max(M, 1); ++m) {
            if (total_kept == 0) rmap[m] = 0;
            else rmap[m] = kept_upto[m] >= 0 ? kept_upto[m] : total_kept - 1;  // wrap to seam side
        }
    }

    Tangle rt = to_tangle(out.resolved);
    TangleCounts rc = tangle_counts(rt);
    Traversal rtr = traverse(rt, rc);
    Tangle ot = to_tangle(d);
    TangleCounts oc = tangle_counts(ot);
    Traversal otr = traverse(ot, oc);

    out.components.resize(rtr.num_components);
    for (int c = 0; c < rtr.num_components; ++c) {
        out.components[c].winding = rtr.winding[c];
        out.components[c].partner = -1;
        out.components[c].origin = -2;  // unset
    }
    int rseam = rt.num_intervals() - 1;
    for (int s = 1; s <= rc.on_interval(rseam); ++s) {
        DecompComponent& dc = out.components[rtr.comp[rseam][s - 1]];
        if (dc.top_seam_slot == -1 || s < dc.top_seam_slot) dc.top_seam_slot = s;
    }
    for (size_t e = 0; e < rt.events.size(); ++e)
        if (rt.events[e].kind != TangleKind::Swap)
            out.components[rtr.cusp_pass[e].component].cusps++;

    // origin components and the induced pairing, read off segment by segment
    const int ointervals = ot.num_intervals();
    for (int m = 0; m < ointervals; ++m) {
        for (int i = 1; i <= oc.on_interval(m); ++i) {
            int rcomp = rtr.comp[rmap[m]][i - 1];
            int ocomp = otr.comp[m][i - 1];
            DecompComponent& dc = out.components[rcomp];
            if (dc.origin == -2) dc.origin = ocomp;
            else if (dc.origin != ocomp) dc.origin = -1;  // mixed origins
            int partner = rtr.comp[rmap[m]][r.rho[m](i) - 1];
            if (dc.partner == -1) dc.partner = partner;
            else if (dc.partner != partner)
                throw InvalidDiagram("ruling pairing is not constant on a resolved component");
        }
    }
    return out;
}

GnrLambda gnr_to_lambda(const FrontDiagram& d, const Ruling& r,
                        const std::optional<Orientation>& o) {
    {
        auto m1 = maslov(d, 1);
        Ruling ungraded = r;
        ungraded.p = 1;
        ungraded.generalized = true;
        std::string why;
        if (!m1 || !validate_ruling(d, ungraded, *m1, &why))
            throw NotGeneralizedRuling("not a generalized normal ruling: " + why);
    }
    Tangle t = to_tangle(d);
    TangleCounts counts = tangle_counts(t);
    Traversal tr = traverse(t, counts);
    const int M = static_cast<int>(d.events.size());
    const int intervals = t.num_intervals();
    const int seam_iv = intervals - 1;
    std::vector<bool> is_switch(std::max(M, 1), false);
    for (int s : r.switches) is_switch[s] = true;

    // walk fixed-point strands, turning corners only at switches
    std::vector<std::vector<bool>> seen(intervals);
    for (int m = 0; m < intervals; ++m) seen[m].assign(counts.on_interval(m), false);
    auto next = [&](int m, int i) -> std::pair<int, int> {
        if (M == 0) return {m, i};
        int e = (m + 1) % M;
        const FrontEvent& ev = d.events[e];
        if (ev.type == FrontEventType::Cross) {
            if (is_switch[e] && (i == ev.k || i == ev.k + 1)) return {e, i};  // corner
            if (i == ev.k) return {e, ev.k + 1};
            if (i == ev.k + 1) return {e, ev.k};
            return {e, i};
        }
        if (ev.type == FrontEventType::LeftCusp) return {e, i < ev.k ? i : i + 2};
        if (i == ev.k || i == ev.k + 1)
            throw NotGeneralizedRuling("fixed strand runs into a right cusp");
        return {e, i < ev.k ? i : i - 2};
    };

    struct Fixed {
        int winding;
        bool rightward;
    };
    std::vector<Fixed> comps;
    for (int m0 = 0; m0 < intervals; ++m0) {
        for (int i0 = 1; i0 <= counts.on_interval(m0); ++i0) {
            if (seen[m0][i0 - 1] || r.rho[m0](i0) != i0) continue;
            int winding = 0;
            int dir = 0;  // +1 rightward, -1 leftward, 0 unknown
            int m = m0, i = i0;
            do {
                seen[m][i - 1] = true;
                if (m == seam_iv) ++winding;
                if (o) {
                    bool right = tr.forward[m][i - 1] == o->rightward[tr.comp[m][i - 1]];
                    int want = right ? 1 : -1;
                    if (dir == 0) dir = want;
                    else if (dir != want)
                        throw NotGeneralizedRuling("fixed strand is not consistently oriented");
                }
                auto [nm, ni] = next(m, i);
                m = nm;
                i = ni;
                if (M == 0) break;
            } while (!(m == m0 && i == i0));
            comps.push_back({winding, dir >= 0});
        }
    }
    std::sort(comps.begin(), comps.end(),
              [](const Fixed& a, const Fixed& b) { return a.winding > b.winding; });
    GnrLambda out;
    std::vector<int> parts;
    for (const Fixed& f : comps) {
        parts.push_back(f.winding);
        out.factor_rightward.push_back(!f.rightward);  // the factor pairs with reversed orientation
    }
    out.lambda = Partition(parts);
    return out;
}

}  // namespace ltorus
