#pragma once

#include <vector>

#include <gmpxx.h>

namespace cnat {

/// 1-based sequence: element [n] holds the n-th term, element [0] is unused (0).
using Sequence = std::vector<mpz_class>;

/// Counts of k-subsets of {1..n} whose element sum is even / odd.
struct ParityCount {
    int n = 0;
    int k = 0;
    mpz_class even;
    mpz_class odd;

    mpz_class diff() const { return even - odd; }
    friend bool operator==(const ParityCount&, const ParityCount&) = default;
};

/// Throws std::out_of_range unless 0 <= k <= n.
mpz_class binomial(int n, int k);

/// Dynamic program over the items 1..n tracking (subset size, sum parity).
/// Throws std::out_of_range unless 0 <= k <= n.
ParityCount eo_counts(int n, int k);

/// eo_counts(n, k) for every k = 0..n from a single DP pass.
std::vector<ParityCount> eo_row(int n);

/// Closed form of e - o for subsets of {1..m}, m = 2q - 1 odd:
/// (-1)^i C(q-1, i) at j = 2i and (-1)^(i+1) C(q-1, i) at j = 2i + 1.
/// Throws std::invalid_argument for even m, std::out_of_range for j outside 0..m.
mpz_class eo_diff_closed(int m, int j);

/// T_1 = 1, T_n = sum_k C(n-1, k-1) C(n-1, k) T_k T_{n-k}.
Sequence t_seq(int max_n);

struct AbSequences {
    Sequence a;  ///< CNATs with determinant +1
    Sequence b;  ///< CNATs with determinant -1
};

/// Joint recurrence for the determinant-split counts, built from the root
/// decomposition: the interleaving parity decides whether det(M) det(M')
/// keeps or flips sign.
AbSequences ab_seq(int max_n);

/// D_1 = 1, D_n = sum_k D_k D_{n-k} (e - o)^{n-1}_{k-1} (e - o)^{n-1}_k.
Sequence d_rec(int max_n);

/// 1 for n = 1, 0 for odd n > 1, (-1)^(n/2) T_{n/2} for even n.
mpz_class d_closed(int n);
/// d_closed for 1..max_n, sharing one T table.
Sequence d_closed_seq(int max_n);

/// All four sequences from the recurrences. d comes from d_rec, not from a - b.
struct SeqTable {
    int max_n = 0;
    Sequence t, a, b, d;
};

SeqTable seq_table(int max_n);

}  // namespace cnat
