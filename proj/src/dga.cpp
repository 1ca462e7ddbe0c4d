#include "ltorus/dga.hpp"

#include <algorithm>
#include <functional>

#include "ltorus/barannikov.hpp"
#include "ltorus/errors.hpp"

namespace ltorus {

void AlgebraElement::toggle(const Word& w) {
    auto it = words.find(w);
    if (it == words.end()) words.insert(w);
    else words.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const Word& w : o.words) toggle(w);
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r += o;
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r;
    for (const Word& a : words) {
        for (const Word& b : o.words) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            r.toggle(w);
        }
    }
    return r;
}

std::string DgaGenerator::name() const {
    switch (kind) {
        case Kind::X:
            return "x[" + std::to_string(m) + "]_" + std::to_string(i) + "," + std::to_string(j);
        case Kind::Y:
            return "y[" + std::to_string(m) + "]_" + std::to_string(i) + "," + std::to_string(j);
        case Kind::Crossing: return "b[" + std::to_string(event) + "]";
        case Kind::RightCusp: return "c[" + std::to_string(event) + "]";
    }
    return "?";
}

namespace {

using Mat = std::vector<std::vector<AlgebraElement>>;

Mat mat_zero(int r, int c) { return Mat(r, std::vector<AlgebraElement>(c)); }

Mat mat_identity(int n) {
    Mat m = mat_zero(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = AlgebraElement::one();
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    int r = static_cast<int>(a.size());
    int mid = static_cast<int>(b.size());
    int c = mid ? static_cast<int>(b[0].size()) : 0;
    Mat out = mat_zero(r, c);
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < mid; ++l) {
            if (a[i][l].is_zero()) continue;
            for (int j = 0; j < c; ++j) {
                if (b[l][j].is_zero()) continue;
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    return out;
}

Mat mat_add(Mat a, const Mat& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
    return a;
}

int mod(int a, int p) {
    int r = a % p;
    return r < 0 ? r + p : r;
}

}  // namespace

Dga build_dga(const FrontDiagram& d, const MaslovPotential& mu) {
    require_valid(d);
    if (mu.p < 1) throw InvalidPotential("modulus must be >= 1");
    Tangle t = to_tangle(d);
    TangleCounts counts = tangle_counts(t);
    const int M = static_cast<int>(d.events.size());
    const int S = t.num_intervals();
    if (static_cast<int>(mu.value.size()) != S) throw InvalidPotential("potential shape mismatch");
    for (int m = 0; m < S; ++m)
        if (static_cast<int>(mu.value[m].size()) != counts.on_interval(m))
            throw InvalidPotential("potential shape mismatch");

    Dga g;
    g.diagram = d;
    g.mu = mu;
    g.p = mu.p;
    g.splashes = S;
    g.xid.resize(S);
    g.yid.resize(S);
    g.event_gen.assign(std::max(M, 1), -1);

    auto add_gen = [&](DgaGenerator gen) {
        g.gens.push_back(gen);
        return static_cast<int>(g.gens.size()) - 1;
    };

    for (int m = 0; m < S; ++m) {
        int n = counts.on_interval(m);
        g.xid[m].assign(n, std::vector<int>(n, -1));
        g.yid[m].assign(n, std::vector<int>(n, -1));
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                int dx = mod(mu.at(m, i) - mu.at(m, j), mu.p);
                g.xid[m][i - 1][j - 1] =
                    add_gen({DgaGenerator::Kind::X, m, i, j, -1, dx});
                g.yid[m][i - 1][j - 1] =
                    add_gen({DgaGenerator::Kind::Y, m, i, j, -1, mod(dx - 1, mu.p)});
            }
        }
    }
    for (int e = 0; e < M; ++e) {
        const FrontEvent& ev = d.events[e];
        if (ev.type == FrontEventType::Cross) {
            int deg = mod(mu.at(e, ev.k + 1) - mu.at(e, ev.k), mu.p);
            g.event_gen[e] = add_gen({DgaGenerator::Kind::Crossing, -1, 0, 0, e, deg});
        } else if (ev.type == FrontEventType::RightCusp) {
            g.event_gen[e] = add_gen({DgaGenerator::Kind::RightCusp, -1, 0, 0, e, mod(1, mu.p)});
        }
    }
    g.diff.assign(g.gens.size(), AlgebraElement::zero());

    auto x_mat = [&](int m) {
        int n = counts.on_interval(m);
        Mat X = mat_zero(n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) X[i - 1][j - 1] = AlgebraElement::gen(g.x(m, i, j));
        return X;
    };
    auto y_mat = [&](int m) {
        int n = counts.on_interval(m);
        Mat Y = mat_zero(n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) Y[i - 1][j - 1] = AlgebraElement::gen(g.y(m, i, j));
        return Y;
    };

    // Transport of Y across the tangle between splash m-1 and splash m.
    auto y_tilde = [&](int m) -> Mat {
        int left = (m - 1 + S) % S;
        Mat Y = y_mat(left);
        if (M == 0) return Y;  // empty tangle around the seam
        const FrontEvent& ev = d.events[m];
        const int k = ev.k;
        const int nl = counts.on_interval(left);
        const int nr = counts.on_interval(m);
        switch (ev.type) {
            case FrontEventType::Cross: {
                AlgebraElement b = AlgebraElement::gen(g.event_gen[m]);
                Mat B = mat_identity(nl), Binv = mat_identity(nl);
                B[k - 1][k - 1] = AlgebraElement::zero();
                B[k - 1][k] = AlgebraElement::one();
                B[k][k - 1] = AlgebraElement::one();
                B[k][k] = b;
                Binv[k - 1][k - 1] = b;
                Binv[k - 1][k] = AlgebraElement::one();
                Binv[k][k - 1] = AlgebraElement::one();
                Binv[k][k] = AlgebraElement::zero();
                Mat Yhat = Y;
                Yhat[k - 1][k] = AlgebraElement::zero();
                return mat_mul(B, mat_mul(Yhat, Binv));
            }
            case FrontEventType::LeftCusp: {
                // J_k Y J_k^T + E_{k,k+1}
                Mat out = mat_zero(nr, nr);
                auto kappa = [k](int i) { return i < k ? i : i - 2; };  // 1-based
                for (int i = 1; i <= nr; ++i) {
                    if (i == k || i == k + 1) continue;
                    for (int j = 1; j <= nr; ++j) {
                        if (j == k || j == k + 1) continue;
                        out[i - 1][j - 1] = Y[kappa(i) - 1][kappa(j) - 1];
                    }
                }
                out[k - 1][k] += AlgebraElement::one();
                return out;
            }
            case FrontEventType::RightCusp: {
                AlgebraElement c = AlgebraElement::gen(g.event_gen[m]);
                Mat out = mat_zero(nr, nr);
                auto tau = [k](int i) { return i < k ? i : i + 2; };  // 1-based
                auto yv = [&](int i, int j) -> AlgebraElement {
                    if (i >= j) return AlgebraElement::zero();
                    return Y[i - 1][j - 1];
                };
                for (int i = 1; i <= nr; ++i) {
                    for (int j = 1; j <= nr; ++j) {
                        AlgebraElement v = yv(tau(i), tau(j));
                        if (i < k && k <= j) {
                            v += yv(i, k + 1) * yv(k, tau(j));
                            v += yv(i, k) * c * yv(k, tau(j));
                            v += yv(i, k + 1) * c * yv(k + 1, tau(j));
                            v += yv(i, k + 1) * c * c * yv(k + 1, tau(j));
                        }
                        out[i - 1][j - 1] = v;
                    }
                }
                return out;
            }
        }
        return Y;
    };

    for (int m = 0; m < S; ++m) {
        const int n = counts.on_interval(m);
        Mat X = x_mat(m), Y = y_mat(m);
        Mat IX = mat_add(mat_identity(n), X);
        Mat dY = mat_mul(Y, Y);
        Mat dX = mat_add(mat_mul(Y, IX), mat_mul(IX, y_tilde(m)));
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i < j) {
                    g.diff[g.y(m, i, j)] = dY[i - 1][j - 1];
                    g.diff[g.x(m, i, j)] = dX[i - 1][j - 1];
                } else if (!dX[i - 1][j - 1].is_zero() || !dY[i - 1][j - 1].is_zero()) {
                    throw Error("differential leaked below the diagonal");
                }
            }
        }
    }
    for (int e = 0; e < M; ++e) {
        const FrontEvent& ev = d.events[e];
        if (ev.type == FrontEventType::LeftCusp) continue;
        int left = (e - 1 + M) % std::max(M, 1);
        AlgebraElement de = AlgebraElement::gen(g.y(left, ev.k, ev.k + 1));
        if (ev.type == FrontEventType::RightCusp) de += AlgebraElement::one();
        g.diff[g.event_gen[e]] = de;
    }
    return g;
}

namespace {

AlgebraElement differentiate(const Dga& g, const AlgebraElement& e) {
    AlgebraElement out;
    for (const Word& w : e.words) {
        for (size_t pos = 0; pos < w.size(); ++pos) {
            for (const Word& mid : g.diff[w[pos]].words) {
                Word nw(w.begin(), w.begin() + pos);
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), w.begin() + pos + 1, w.end());
                out.toggle(nw);
            }
        }
    }
    return out;
}

int word_degree(const Dga& g, const Word& w) {
    int d = 0;
    for (int id : w) d += g.gens[id].degree;
    return ((d % g.p) + g.p) % g.p;
}

}  // namespace

StructureReport check_structure(const Dga& g) {
    for (size_t id = 0; id < g.gens.size(); ++id) {
        int want = ((g.gens[id].degree - 1) % g.p + g.p) % g.p;
        for (const Word& w : g.diff[id].words) {
            if (word_degree(g, w) != want) {
                return {false, g.gens[id].name(), "differential term does not drop degree by 1"};
            }
        }
        if (!differentiate(g, g.diff[id]).is_zero())
            return {false, g.gens[id].name(), "d^2 != 0"};
    }
    return {};
}

bool is_augmentation(const Dga& g, const Augmentation& eps, int p) {
    if (p != g.p) throw InvalidPotential("augmentation modulus must match the grading");
    if (eps.value.size() != g.gens.size()) return false;
    for (size_t id = 0; id < g.gens.size(); ++id)
        if (eps.value[id] && g.gens[id].degree != 0) return false;
    for (size_t id = 0; id < g.gens.size(); ++id) {
        int acc = 0;
        for (const Word& w : g.diff[id].words) {
            int prod = 1;
            for (int gid : w) prod &= eps.value[gid];
            acc ^= prod;
        }
        if (acc) return false;
    }
    return true;
}

Augmentation augmentation_from_gnr(const Dga& g, const Ruling& r) {
    std::string why;
    if (!validate_ruling(g.diagram, r, g.mu, &why))
        throw RulingMismatch("ruling does not fit the diagram: " + why);
    const int M = static_cast<int>(g.diagram.events.size());
    Augmentation eps;
    eps.value.assign(g.gens.size(), 0);
    for (int m = 0; m < g.splashes; ++m)
        for (int i = 1; i <= g.strands(m); ++i)
            if (r.rho[m](i) > i) eps.value[g.y(m, i, r.rho[m](i))] = 1;
    for (int e : r.switches) {
        eps.value[g.event_gen[e]] = 1;
        const int k = g.diagram.events[e].k;
        const Involution& rho = r.rho[e];  // switch keeps the involution
        eps.value[g.x(e, k, k + 1)] = 1;
        bool fixed = rho.fixes(k) || rho.fixes(k + 1);
        if (!fixed) {
            int rk = rho(k), rk1 = rho(k + 1);
            bool disjoint = rk < k && rk1 > k + 1;
            if (!disjoint) eps.value[g.x(e, std::min(rk, rk1), std::max(rk, rk1))] = 1;
        }
    }
    (void)M;
    if (!is_augmentation(g, eps, g.p))
        throw RulingMismatch("constructed map failed the augmentation equations");
    return eps;
}

Ruling gnr_from_augmentation(const Dga& g, const Augmentation& eps) {
    if (!is_augmentation(g, eps, g.p)) throw AugmentationInvalid("not an augmentation");
    const int M = static_cast<int>(g.diagram.events.size());
    Ruling r;
    r.generalized = true;
    r.p = g.p;
    r.rho.resize(g.splashes);
    for (int m = 0; m < g.splashes; ++m) {
        MComplexMatrix e = MComplexMatrix::zero(g.strands(m));
        for (int i = 1; i <= g.strands(m); ++i)
            for (int j = i + 1; j <= g.strands(m); ++j)
                if (eps.value[g.y(m, i, j)]) e.set(i, j);
        r.rho[m] = pairing(e).tau;
    }
    for (int e = 0; e < M; ++e) {
        if (g.diagram.events[e].type != FrontEventType::Cross) continue;
        const int k = g.diagram.events[e].k;
        const Involution& prev = r.rho[(e - 1 + M) % M];
        if (r.rho[e] == prev && !(prev.fixes(k) && prev.fixes(k + 1))) r.switches.push_back(e);
    }
    std::string why;
    if (!validate_ruling(g.diagram, r, g.mu, &why))
        throw AugmentationInvalid("extracted involutions violate the ruling rules: " + why);
    return r;
}

int count_free_generators(const Dga& g, int p) {
    if (p != g.p) throw InvalidPotential("modulus must match the grading");
    int n = 0;
    for (const DgaGenerator& gen : g.gens)
        if (gen.degree == 0) ++n;
    return n;
}

namespace {

struct BruteContext {
    std::vector<int> free_ids;              // generator id per free slot
    std::vector<int> slot_of;               // generator id -> slot or -1
    struct Constraint {
        int constant = 0;
        std::vector<std::vector<int>> words;  // slots, deduplicated
    };
    std::vector<std::vector<Constraint>> by_depth;  // checked once slot d is set
    bool infeasible = false;
};

BruteContext prepare(const Dga& g, int limit) {
    BruteContext cx;
    cx.slot_of.assign(g.gens.size(), -1);
    for (size_t id = 0; id < g.gens.size(); ++id) {
        if (g.gens[id].degree == 0) {
            cx.slot_of[id] = static_cast<int>(cx.free_ids.size());
            cx.free_ids.push_back(static_cast<int>(id));
        }
    }
    if (static_cast<int>(cx.free_ids.size()) > limit)
        throw TooLarge("degree-0 generator count " + std::to_string(cx.free_ids.size()) +
                       " exceeds limit " + std::to_string(limit));
    cx.by_depth.resize(cx.free_ids.size() + 1);
    for (size_t id = 0; id < g.gens.size(); ++id) {
        BruteContext::Constraint con;
        int depth = -1;
        bool dropped_all = true;
        for (const Word& w : g.diff[id].words) {
            std::vector<int> slots;
            bool zero = false;
            for (int gid : w) {
                if (cx.slot_of[gid] == -1) { zero = true; break; }
                slots.push_back(cx.slot_of[gid]);
            }
            if (zero) continue;
            dropped_all = false;
            if (slots.empty()) {
                con.constant ^= 1;
                continue;
            }
            std::sort(slots.begin(), slots.end());
            slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
            depth = std::max(depth, slots.back());
            con.words.push_back(std::move(slots));
        }
        (void)dropped_all;
        if (con.words.empty()) {
            if (con.constant) cx.infeasible = true;
            continue;
        }
        cx.by_depth[depth].push_back(std::move(con));
    }
    return cx;
}

template <typename Sink>
void brute_core(const Dga& g, int limit, Sink&& sink) {
    BruteContext cx = prepare(g, limit);
    if (cx.infeasible) return;
    const int nfree = static_cast<int>(cx.free_ids.size());
    std::vector<std::uint8_t> bits(nfree, 0);
    auto check = [&](int depth) {
        for (const auto& con : cx.by_depth[depth]) {
            int acc = con.constant;
            for (const auto& w : con.words) {
                int prod = 1;
                for (int s : w) prod &= bits[s];
                acc ^= prod;
            }
            if (acc) return false;
        }
        return true;
    };
    bool stop = false;
    std::function<void(int)> rec = [&](int depth) {
        if (stop) return;
        if (depth == nfree) {
            // constraints with no free support live at depth 0 and were
            // checked before the first assignment when nfree == 0
            Augmentation eps;
            eps.value.assign(g.gens.size(), 0);
            for (int s = 0; s < nfree; ++s) eps.value[cx.free_ids[s]] = bits[s];
            if (!sink(std::move(eps))) stop = true;
            return;
        }
        for (int v = 0; v <= 1; ++v) {
            bits[depth] = static_cast<std::uint8_t>(v);
            if (check(depth)) rec(depth + 1);
            if (stop) return;
        }
        bits[depth] = 0;
    };
    if (nfree == 0) {
        if (check(0)) {
            Augmentation eps;
            eps.value.assign(g.gens.size(), 0);
            sink(std::move(eps));
        }
        return;
    }
    rec(0);
}

}  // namespace

std::vector<Augmentation> brute_force_augmentations(const Dga& g, int p, int limit) {
    if (p != g.p) throw InvalidPotential("modulus must match the grading");
    std::vector<Augmentation> out;
    brute_core(g, limit, [&](Augmentation&& a) {
        out.push_back(std::move(a));
        return true;
    });
    return out;
}

bool has_augmentation(const Dga& g, int p, int limit) {
    if (p != g.p) throw InvalidPotential("modulus must match the grading");
    bool found = false;
    brute_core(g, limit, [&](Augmentation&&) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace ltorus
