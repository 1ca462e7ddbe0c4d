#include "ltorus/barannikov.hpp"

#include <bit>

#include "ltorus/errors.hpp"

namespace ltorus {

namespace {

using Rows = std::vector<std::uint64_t>;

Rows multiply(const Rows& a, const Rows& b, int n) {
    Rows r(n, 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t row = a[i];
        while (row) {
            int j = std::countr_zero(row);
            row &= row - 1;
            r[i] ^= b[j];
        }
    }
    return r;
}

bool is_zero(const Rows& a) {
    for (auto r : a)
        if (r) return false;
    return true;
}

void check_m_complex(const MComplexMatrix& m) {
    if (m.n > 64) throw Error("matrix dimension above 64 is not supported");
    for (int i = 0; i < m.n; ++i) {
        std::uint64_t low = i == 63 ? ~std::uint64_t(0) : (std::uint64_t(1) << (i + 1)) - 1;
        if (m.rows[i] & low)
            throw NotStrictlyUpperTriangular("entry on or below the diagonal in row " +
                                             std::to_string(i + 1));
    }
    if (!is_zero(multiply(m.rows, m.rows, m.n))) throw NotSquareZero("D^2 != 0");
}

}  // namespace

MComplexMatrix b_tau(const Involution& tau, int n) {
    MComplexMatrix b = MComplexMatrix::zero(n);
    for (int i = 1; i <= n; ++i)
        if (i < tau(i)) b.set(i, tau(i));
    return b;
}

int f2_rank(const MComplexMatrix& m) {
    Rows rows = m.rows;
    int rank = 0;
    for (int col = 0; col < m.n; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.n; ++i)
            if ((rows[i] >> col) & 1) { pivot = i; break; }
        if (pivot == -1) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = 0; i < m.n; ++i)
            if (i != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

namespace {

// Bottom-up row reduction with minimal-column pivots. Adding later rows to
// earlier ones is a triangular change of basis, so the surviving pivot
// positions are exactly the canonical pairs.
Involution reduce_tau(const MComplexMatrix& m) {
    Rows rows = m.rows;
    std::vector<int> row_of_pivot(m.n + 1, -1);  // column (1-based) -> row index
    Involution tau = Involution::identity(m.n);
    for (int i = m.n - 1; i >= 0; --i) {
        while (rows[i]) {
            int j = std::countr_zero(rows[i]) + 1;  // minimal column, 1-based
            if (row_of_pivot[j] == -1) {
                row_of_pivot[j] = i;
                tau.img[i] = j;
                tau.img[j - 1] = i + 1;
                break;
            }
            rows[i] ^= rows[row_of_pivot[j]];
        }
    }
    return tau;
}

// Solves U D + B U = D + B for strictly upper U over F2; P = I + U then
// conjugates D to B. Solvability is guaranteed by the canonical form result.
Rows solve_certificate(const MComplexMatrix& m, const Involution& tau) {
    const int n = m.n;
    const MComplexMatrix b = b_tau(tau, n);
    std::vector<std::pair<int, int>> cells;  // 0-based (i, j), i < j
    std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            var[i][j] = static_cast<int>(cells.size());
            cells.emplace_back(i, j);
        }
    const int nv = static_cast<int>(cells.size());
    const int words = (nv + 1 + 63) / 64;
    std::vector<std::vector<std::uint64_t>> eqs;
    auto set_bit = [&](std::vector<std::uint64_t>& eq, int v) { eq[v / 64] ^= std::uint64_t(1) << (v % 64); };

    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            std::vector<std::uint64_t> eq(words, 0);
            for (int j = r + 1; j < n; ++j)
                if ((m.rows[j] >> c) & 1) set_bit(eq, var[r][j]);  // U[r][j] D[j][c]
            int tr = tau(r + 1) - 1;
            if (tr > r && tr < c) set_bit(eq, var[tr][c]);  // (B U)[r][c] = U[tau(r)][c]
            bool rhs = ((m.rows[r] >> c) & 1) ^ ((b.rows[r] >> c) & 1);
            if (rhs) set_bit(eq, nv);
            bool empty = !rhs;
            if (empty)
                for (auto w : eq) empty = empty && w == 0;
            if (!empty) eqs.push_back(std::move(eq));
        }
    }

    // Gaussian elimination over the augmented system
    std::vector<int> assigned(nv, 0);
    int rank = 0;
    for (int v = 0; v < nv && rank < static_cast<int>(eqs.size()); ++v) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(eqs.size()); ++i)
            if ((eqs[i][v / 64] >> (v % 64)) & 1) { pivot = i; break; }
        if (pivot == -1) continue;
        std::swap(eqs[rank], eqs[pivot]);
        for (int i = 0; i < static_cast<int>(eqs.size()); ++i) {
            if (i == rank) continue;
            if ((eqs[i][v / 64] >> (v % 64)) & 1)
                for (int w = 0; w < words; ++w) eqs[i][w] ^= eqs[rank][w];
        }
        ++rank;
    }
    // back-substitute: each pivot row determines its leading variable, free
    // variables stay zero
    std::vector<int> value(nv, 0);
    for (const auto& eq : eqs) {
        int lead = -1;
        for (int v = 0; v < nv && lead == -1; ++v)
            if ((eq[v / 64] >> (v % 64)) & 1) lead = v;
        bool rhs = (eq[nv / 64] >> (nv % 64)) & 1;
        if (lead == -1) {
            if (rhs) throw Error("certificate system inconsistent; pairing is wrong");
            continue;
        }
        int acc = rhs;
        for (int v = lead + 1; v < nv; ++v)
            if ((eq[v / 64] >> (v % 64)) & 1) acc ^= value[v];
        value[lead] = acc;
    }

    Rows p(n, 0);
    for (int i = 0; i < n; ++i) p[i] |= std::uint64_t(1) << i;
    for (int v = 0; v < nv; ++v)
        if (value[v]) p[cells[v].first] |= std::uint64_t(1) << cells[v].second;
    return p;
}

}  // namespace

Pairing pairing(const MComplexMatrix& m) {
    check_m_complex(m);
    Involution tau = reduce_tau(m);
    Rows p = solve_certificate(m, tau);
    // verify P D = B_tau P exactly
    Rows lhs = multiply(p, m.rows, m.n);
    Rows rhs = multiply(b_tau(tau, m.n).rows, p, m.n);
    if (lhs != rhs) throw Error("certificate verification failed; pairing is wrong");
    return {tau, p};
}

SwapReport swap_check(const MComplexMatrix& m, int k) {
    check_m_complex(m);
    if (k < 1 || k + 1 > m.n) throw PreconditionViolated("index out of range");
    if (m.entry(k, k + 1))
        throw PreconditionViolated("entry (k, k+1) must vanish for the swap lemma");

    MComplexMatrix swapped = m;
    std::swap(swapped.rows[k - 1], swapped.rows[k]);
    for (int i = 0; i < m.n; ++i) {
        std::uint64_t bk = (swapped.rows[i] >> (k - 1)) & 1;
        std::uint64_t bk1 = (swapped.rows[i] >> k) & 1;
        swapped.rows[i] &= ~((std::uint64_t(3)) << (k - 1));
        swapped.rows[i] |= (bk << k) | (bk1 << (k - 1));
    }

    SwapReport rep{pairing(m).tau, pairing(swapped).tau, SwapReport::Outcome::Other, 0};
    const Involution& tau = rep.tau;
    int tk = tau(k), tk1 = tau(k + 1);
    if ((tk1 < tk && tk < k) || (tk < k && tk1 > k + 1) || (tk1 > k + 1 && tk > tk1))
        rep.allowed_case = 1;
    else if ((tk < k && tk1 == k + 1) || (tk == k && tk1 > k + 1))
        rep.allowed_case = 2;
    else if (tk == k && tk1 == k + 1)
        rep.allowed_case = 3;

    if (rep.tau_prime == tau.conj_adjacent(k)) rep.outcome = SwapReport::Outcome::Conjugate;
    else if (rep.tau_prime == tau)
        rep.outcome = rep.allowed_case ? SwapReport::Outcome::EqualAllowed
                                       : SwapReport::Outcome::EqualUnexplained;
    return rep;
}

}  // namespace ltorus
