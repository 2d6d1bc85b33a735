#include "hyperseq/engine.hpp"

#include "hyperseq/sequence.hpp"
#include "hyperseq/tiling.hpp"

namespace hyperseq {

namespace {

std::vector<Nat> seeded_row(const Nat& f0, const Nat& f1, SeqIndex n_max) {
  require_linear_index(n_max);
  std::vector<Nat> row{f0};
  if (n_max >= 1) row.push_back(f1);
  for (SeqIndex k = 2; k <= n_max; ++k) row.push_back(row[k - 1] + row[k - 2]);
  return row;
}

}  // namespace

Engine Engine::reference(std::uint64_t enumeration_cap) {
  Engine e;
  e.fib = [](SeqIndex n) { return hyperseq::fib(n); };
  e.lucas = [](SeqIndex n) { return hyperseq::lucas(n); };
  e.binom = [](SeqIndex n, std::int64_t k) { return hyperseq::binom(n, k); };
  e.hyper_fib_row = [](Generation r, SeqIndex n_max) {
    return hyper_fib_cumsum(r, n_max);
  };
  e.hyper_lucas_row = [](Generation r, SeqIndex n_max) {
    return hyper_lucas_cumsum(r, n_max);
  };
  e.hyper_fib_point = [](Generation r, SeqIndex n) {
    return hyper_fib_closed(r, n);
  };
  e.board_oracle = [enumeration_cap](std::uint64_t m, std::uint64_t min) {
    return enumerate_board_count(m, min, enumeration_cap);
  };
  e.bracelet_oracle = [enumeration_cap](std::uint64_t m, std::uint64_t min) {
    return enumerate_bracelet_count(m, min, enumeration_cap);
  };
  e.enumeration_cap = enumeration_cap;
  return e;
}

Engine Engine::with_fib_seeds(const Nat& f0, const Nat& f1,
                              std::uint64_t enumeration_cap) {
  Engine e = reference(enumeration_cap);
  e.fib = [f0, f1](SeqIndex n) { return seeded_row(f0, f1, n).back(); };
  e.hyper_fib_row = [f0, f1](Generation r, SeqIndex n_max) {
    require_generation(r);
    return prefix_sums(seeded_row(f0, f1, n_max), r);
  };
  e.hyper_fib_point = [f0, f1](Generation r, SeqIndex n) {
    require_generation(r);
    Nat correction = 0;
    for (Generation k = 0; k < r; ++k) {
      correction += hyperseq::binom(n + r + k, static_cast<std::int64_t>(r - 1 - k));
    }
    return seeded_row(f0, f1, n + 2 * r).back().checked_sub(correction);
  };
  return e;
}

}  // namespace hyperseq
