#pragma once

#include <string_view>

#include "hyperseq/limits.hpp"
#include "hyperseq/nat.hpp"

namespace hyperseq {

enum class PhiSide { below_phi, above_phi, equal };

std::string_view to_string(PhiSide side);

// Position of num/den relative to phi = (1 + sqrt 5) / 2, decided with
// integer arithmetic only:
//   num/den > phi  <=>  2 num - den > 0  and  (2 num - den)^2 > 5 den^2.
// `equal` is unreachable for rational input. Throws DomainError if den <= 0.
PhiSide compare_with_phi(const Int& num, const Int& den);

// Exact position of the ratio numerator/denominator relative to phi.
struct RationalGap {
  Nat numerator;
  Nat denominator;
  PhiSide side = PhiSide::equal;
};

struct RatioCheck {
  bool within = false;
  RationalGap gap;
};

// Decides |F_{n+1}^(r) / F_n^(r) - phi| < eps_num / eps_den exactly.
// Throws DomainError when eps_den = 0 or n = 0.
RatioCheck ratio_gap_within(Generation r, SeqIndex n, const Nat& eps_num,
                            const Nat& eps_den);

// Same decision for an arbitrary ratio p/q with q > 0.
RatioCheck ratio_within(const Nat& p, const Nat& q, const Nat& eps_num,
                        const Nat& eps_den);

}  // namespace hyperseq
