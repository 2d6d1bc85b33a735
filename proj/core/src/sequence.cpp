#include "hyperseq/sequence.hpp"

#include <bit>
#include <utility>

#include "hyperseq/errors.hpp"

namespace hyperseq {

namespace {

// (F_n, F_{n+1}) by fast doubling:
//   F_{2k}   = F_k (2 F_{k+1} - F_k)
//   F_{2k+1} = F_k^2 + F_{k+1}^2
std::pair<Nat, Nat> fib_pair(SeqIndex n) {
  Nat a = 0;
  Nat b = 1;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    Nat c = a * (b + b).checked_sub(a);
    Nat d = a * a + b * b;
    if ((n >> bit) & 1U) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {std::move(a), std::move(b)};
}

std::vector<Nat> linear_row(Nat first, Nat second, SeqIndex n_max) {
  std::vector<Nat> row;
  row.reserve(n_max + 1);
  row.push_back(std::move(first));
  if (n_max >= 1) row.push_back(std::move(second));
  for (SeqIndex k = 2; k <= n_max; ++k) {
    row.push_back(row[k - 1] + row[k - 2]);
  }
  return row;
}

// Sweeps n = 0..target keeping column[g] = X_n^(g) for g = 0..r, where the
// base row X^(0) is supplied one term at a time by `next_base`.
template <typename BaseStep>
Nat sweep_generations(Generation r, SeqIndex target, Nat base0,
                      BaseStep next_base) {
  std::vector<Nat> column(r + 1, base0);
  for (SeqIndex k = 1; k <= target; ++k) {
    column[0] = next_base();
    for (Generation g = 1; g <= r; ++g) {
      column[g] += column[g - 1];
    }
  }
  return column[r];
}

// F_{n+2r} minus the r binomial corrections; no cap checks.
Nat closed_form(Generation r, SeqIndex n) {
  Nat correction = 0;
  for (Generation k = 0; k < r; ++k) {
    correction += binom(n + r + k, static_cast<std::int64_t>(r - 1 - k));
  }
  return fib_pair(n + 2 * r).first.checked_sub(correction);
}

}  // namespace

Nat fib(SeqIndex n) {
  require_point_index(n);
  return fib_pair(n).first;
}

Nat lucas(SeqIndex n) {
  require_point_index(n);
  auto [f, f_next] = fib_pair(n);
  return (f_next + f_next).checked_sub(f);
}

std::vector<Nat> fib_row(SeqIndex n_max) {
  require_linear_index(n_max);
  return linear_row(0, 1, n_max);
}

std::vector<Nat> lucas_row(SeqIndex n_max) {
  require_linear_index(n_max);
  return linear_row(2, 1, n_max);
}

Nat binom(SeqIndex n, std::int64_t k) {
  if (k < 0 || static_cast<SeqIndex>(k) > n) return 0;
  detail::count_binomial();
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Nat(out);
}

Nat polytopic(Generation r, SeqIndex n) {
  if (n == 0) return 0;
  return binom(n + r - 1, static_cast<std::int64_t>(r));
}

std::vector<Nat> prefix_sums(std::vector<Nat> row, Generation passes) {
  for (Generation pass = 0; pass < passes; ++pass) {
    for (std::size_t k = 1; k < row.size(); ++k) {
      row[k] += row[k - 1];
    }
  }
  return row;
}

std::vector<Nat> hyper_fib_cumsum(Generation r, SeqIndex n_max) {
  require_generation(r);
  require_linear_index(n_max);
  return prefix_sums(fib_row(n_max), r);
}

Nat hyper_fib_rec(Generation r, SeqIndex n) {
  require_generation(r);
  require_linear_index(n);
  Nat prev = 0;
  Nat cur = 1;
  bool first = true;
  return sweep_generations(r, n, 0, [&]() {
    if (first) {
      first = false;
      return cur;
    }
    Nat next = prev + cur;
    prev = std::move(cur);
    cur = next;
    return next;
  });
}

std::vector<Nat> hyper_fib_poly_rec(Generation r, SeqIndex n_max) {
  require_generation(r);
  require_linear_index(n_max);
  std::vector<Nat> row;
  row.reserve(n_max + 1);
  row.push_back(0);
  if (n_max >= 1) row.push_back(1);
  const auto lower = static_cast<std::int64_t>(r) - 1;
  for (SeqIndex k = 0; k + 2 <= n_max; ++k) {
    row.push_back(row[k + 1] + row[k] + binom(k + r, lower));
  }
  return row;
}

Nat hyper_fib_closed(Generation r, SeqIndex n) {
  require_generation(r);
  require_point_index(n);
  return closed_form(r, n);
}

Nat hyper_fib_binom_sum(Generation r, SeqIndex n) {
  require_generation(r);
  require_linear_index(n);
  if (n == 0) return 0;
  const SeqIndex m = n - 1;
  Nat sum = 0;
  for (SeqIndex k = 0; k <= m / 2; ++k) {
    sum += binom(m + r - k, static_cast<std::int64_t>(r + k));
  }
  return sum;
}

std::vector<Nat> hyper_lucas_cumsum(Generation r, SeqIndex n_max) {
  require_generation(r);
  require_linear_index(n_max);
  auto row = prefix_sums(lucas_row(n_max), r);
  if (row[0] != Nat(2) || (n_max >= 1 && row[1] != Nat(2 * r + 1))) {
    throw InvariantError("hyperlucas seeds violated for r = " +
                         std::to_string(r));
  }
  return row;
}

Nat hyper_lucas_rec(Generation r, SeqIndex n) {
  require_generation(r);
  require_linear_index(n);
  Nat prev = 2;
  Nat cur = 1;
  bool first = true;
  return sweep_generations(r, n, 2, [&]() {
    if (first) {
      first = false;
      return cur;
    }
    Nat next = prev + cur;
    prev = std::move(cur);
    cur = next;
    return next;
  });
}

Nat hyper_lucas_closed(Generation r, SeqIndex n) {
  require_generation(r);
  require_point_index(n);
  if (n == 0) return 2;
  return closed_form(r, n - 1) + closed_form(r, n + 1) +
         binom(n + r - 1, static_cast<std::int64_t>(r) - 1);
}

}  // namespace hyperseq
