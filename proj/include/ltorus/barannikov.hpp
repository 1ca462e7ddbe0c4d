#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ltorus/ruling.hpp"

namespace ltorus {

// Strictly upper-triangular F2 matrix with D^2 = 0: the differential of an
// M-complex, d v_i = sum_{i<j} D[i][j] v_j. Rows are bitmasks over columns,
// 0-based internally; the involution API is 1-based like everything else.
struct MComplexMatrix {
    int n = 0;
    std::vector<std::uint64_t> rows;
    std::optional<std::vector<int>> degrees;  // optional labels, used by callers

    static MComplexMatrix zero(int n) { return {n, std::vector<std::uint64_t>(n, 0), {}}; }
    bool entry(int i, int j) const { return (rows[i - 1] >> (j - 1)) & 1; }  // 1-based
    void set(int i, int j) { rows[i - 1] |= std::uint64_t(1) << (j - 1); }

    bool operator==(const MComplexMatrix& o) const { return n == o.n && rows == o.rows; }
};

// B_tau: single 1 in position (i, tau(i)) for every pair i < tau(i).
MComplexMatrix b_tau(const Involution& tau, int n);

int f2_rank(const MComplexMatrix& m);

struct Pairing {
    Involution tau;
    std::vector<std::uint64_t> P;  // upper unitriangular, P D P^-1 = B_tau
};

// Canonical pairing: reduces rows bottom-up with minimal-column pivots,
// pairing each row with its pivot column; the triangular certificate P is
// then produced by solving the conjugation equation and verified exactly.
// Throws NotStrictlyUpperTriangular / NotSquareZero on bad input.
Pairing pairing(const MComplexMatrix& m);

struct SwapReport {
    enum class Outcome {
        Conjugate,         // tau' = (k k+1) tau (k k+1)
        EqualAllowed,      // tau' = tau and one of the listed cases applies
        EqualUnexplained,  // tau' = tau outside the listed cases
        Other,             // neither value: violates the swap lemma
    };

    Involution tau, tau_prime;
    Outcome outcome;
    int allowed_case = 0;  // 1, 2, 3 for the three case families; 0 if none
};

// Compares the pairing of D with that of the (k k+1)-conjugated matrix.
// Requires entry (k, k+1) of D to be zero.
SwapReport swap_check(const MComplexMatrix& m, int k);

}  // namespace ltorus
