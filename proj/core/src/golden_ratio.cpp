#include "hyperseq/golden_ratio.hpp"

#include "hyperseq/errors.hpp"
#include "hyperseq/sequence.hpp"

namespace hyperseq {

std::string_view to_string(PhiSide side) {
  switch (side) {
    case PhiSide::below_phi:
      return "below_phi";
    case PhiSide::above_phi:
      return "above_phi";
    case PhiSide::equal:
      return "equal";
  }
  return "?";
}

PhiSide compare_with_phi(const Int& num, const Int& den) {
  if (sgn(den) <= 0) throw DomainError("ratio denominator must be positive");
  // num/den vs phi  <=>  t = 2 num - den  vs  den * sqrt 5
  const Int t = 2 * num - den;
  if (sgn(t) <= 0) return PhiSide::below_phi;
  const int c = cmp(Int(t * t), Int(5 * den * den));
  if (c > 0) return PhiSide::above_phi;
  if (c < 0) return PhiSide::below_phi;
  return PhiSide::equal;
}

RatioCheck ratio_within(const Nat& p, const Nat& q, const Nat& eps_num,
                        const Nat& eps_den) {
  if (eps_den.is_zero()) throw DomainError("eps denominator must be positive");
  if (q.is_zero()) throw DomainError("ratio denominator must be positive");
  // p/q -+ e/d = (p d -+ e q) / (q d)
  const Int den = q.to_int() * eps_den.to_int();
  const Int pd = p.to_int() * eps_den.to_int();
  const Int eq = eps_num.to_int() * q.to_int();
  const bool lower_below = compare_with_phi(Int(pd - eq), den) == PhiSide::below_phi;
  const bool upper_above = compare_with_phi(Int(pd + eq), den) == PhiSide::above_phi;

  RatioCheck out;
  out.within = lower_below && upper_above;
  out.gap = RationalGap{p, q, compare_with_phi(p.to_int(), q.to_int())};
  return out;
}

RatioCheck ratio_gap_within(Generation r, SeqIndex n, const Nat& eps_num,
                            const Nat& eps_den) {
  if (eps_den.is_zero()) throw DomainError("eps denominator must be positive");
  if (n == 0) throw DomainError("F_0^(r) = 0 cannot be a ratio denominator");
  require_point_index(n + 1);
  return ratio_within(hyper_fib_closed(r, n + 1), hyper_fib_closed(r, n),
                      eps_num, eps_den);
}

}  // namespace hyperseq
