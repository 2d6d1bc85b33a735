#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hyperseq/limits.hpp"
#include "hyperseq/nat.hpp"

namespace hyperseq {

// The primitives the identity suite evaluates identities with. Identities
// never call the sequence functions directly, so a deliberately corrupted
// engine can be swapped in to show the suite is not vacuous.
struct Engine {
  std::function<Nat(SeqIndex)> fib;
  std::function<Nat(SeqIndex)> lucas;
  std::function<Nat(SeqIndex, std::int64_t)> binom;
  // Definition-based rows (iterated prefix sums).
  std::function<std::vector<Nat>(Generation, SeqIndex)> hyper_fib_row;
  std::function<std::vector<Nat>(Generation, SeqIndex)> hyper_lucas_row;
  // Closed-form point query.
  std::function<Nat(Generation, SeqIndex)> hyper_fib_point;
  // Enumeration counts: (length, min dominoes) -> number of tilings.
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> board_oracle;
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> bracelet_oracle;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;

  static Engine reference(std::uint64_t enumeration_cap = kDefaultEnumerationCap);

  // Reference engine whose Fibonacci base row starts from (f0, f1) instead
  // of (0, 1). fib, hyper_fib_row and hyper_fib_point all inherit the
  // corrupted seeds; everything else is untouched.
  static Engine with_fib_seeds(const Nat& f0, const Nat& f1,
                               std::uint64_t enumeration_cap = kDefaultEnumerationCap);
};

}  // namespace hyperseq
