#pragma once

#include <cstdint>
#include <vector>

#include "hyperseq/limits.hpp"
#include "hyperseq/nat.hpp"

/// Exact Fibonacci, Lucas, hyperfibonacci and hyperlucas numbers.
///
/// F^(0) is the Fibonacci sequence (F_0 = 0, F_1 = 1) and L^(0) the Lucas
/// sequence (L_0 = 2, L_1 = 1). Generation r >= 1 is the sequence of prefix
/// sums of generation r - 1. The hyperfibonacci numbers are exposed through
/// five strategies that share no code path beyond Nat arithmetic, so that
/// they can be cross-checked against each other.
namespace hyperseq {

/// F_n by fast doubling, O(log n) multiplications.
Nat fib(SeqIndex n);

/// L_n = 2 F_{n+1} - F_n, from the same fast-doubling pair.
Nat lucas(SeqIndex n);

/// [F_0, ..., F_{n_max}] by linear iteration.
std::vector<Nat> fib_row(SeqIndex n_max);
/// [L_0, ..., L_{n_max}] by linear iteration.
std::vector<Nat> lucas_row(SeqIndex n_max);

/// C(n, k), zero when k < 0 or k > n.
Nat binom(SeqIndex n, std::int64_t k);

/// Regular r-topic number C(n + r - 1, r). polytopic(r, 0) = 0 for every r,
/// so polytopic(0, n) is 1 exactly when n >= 1.
Nat polytopic(Generation r, SeqIndex n);

/// Applies `passes` rounds of in-place prefix summation to `row`.
std::vector<Nat> prefix_sums(std::vector<Nat> row, Generation passes);

// ---- hyperfibonacci strategies -------------------------------------------

/// Row [F_0^(r), ..., F_{n_max}^(r)] as r prefix-sum passes over fib_row.
std::vector<Nat> hyper_fib_cumsum(Generation r, SeqIndex n_max);

/// F_n^(r) via F_n^(r) = F_{n-1}^(r) + F_n^(r-1), sweeping n with an
/// (r+1)-entry column of running values.
Nat hyper_fib_rec(Generation r, SeqIndex n);

/// Row seeded with 0, 1 and advanced by
/// F_{k+2}^(r) = F_{k+1}^(r) + F_k^(r) + C(k + r, r - 1).
std::vector<Nat> hyper_fib_poly_rec(Generation r, SeqIndex n_max);

/// F_n^(r) = F_{n+2r} - sum_{k<r} C(n + r + k, r - 1 - k).
/// Throws InvariantError if the subtraction would underflow.
Nat hyper_fib_closed(Generation r, SeqIndex n);

/// F_n^(r) as a pure binomial sum, F_{m+1}^(r) = sum_{k<=m/2} C(m+r-k, r+k).
Nat hyper_fib_binom_sum(Generation r, SeqIndex n);

// ---- hyperlucas ----------------------------------------------------------

/// Row [L_0^(r), ..., L_{n_max}^(r)] by prefix sums over lucas_row.
/// Checks L_0^(r) = 2 and L_1^(r) = 2r + 1 on the way out.
std::vector<Nat> hyper_lucas_cumsum(Generation r, SeqIndex n_max);

/// L_n^(r) via the same 2-D recurrence as hyper_fib_rec over a Lucas base.
Nat hyper_lucas_rec(Generation r, SeqIndex n);

/// L_n^(r) = F_{n-1}^(r) + F_{n+1}^(r) + C(n + r - 1, r - 1) for n >= 1,
/// and L_0^(r) = 2.
Nat hyper_lucas_closed(Generation r, SeqIndex n);

}  // namespace hyperseq
