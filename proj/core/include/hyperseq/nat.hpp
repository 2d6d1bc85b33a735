#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hyperseq {

// Signed arbitrary-precision integer used wherever identities subtract.
using Int = mpz_class;

// Arbitrary-precision nonnegative integer.
//
// Every arithmetic operator bumps a thread-local counter so the benchmark
// surface can report big-integer operation counts per strategy. Subtraction
// is only available in checked form since a negative result can only come
// from a bug.
class Nat {
 public:
  Nat() = default;

  template <std::integral T>
  Nat(T v) : value_(to_mpz(v)) {}  // NOLINT(google-explicit-constructor)

  // Throws DomainError if v < 0.
  explicit Nat(const Int& v);

  // Decimal digits only, no sign, no whitespace. Throws DomainError.
  static Nat parse(std::string_view text);

  std::string str() const { return value_.get_str(); }
  const mpz_class& raw() const noexcept { return value_; }
  Int to_int() const { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  std::size_t bit_length() const;

  Nat& operator+=(const Nat& rhs);
  Nat& operator*=(const Nat& rhs);

  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }

  // Throws InvariantError when rhs > *this.
  Nat checked_sub(const Nat& rhs) const;

  friend bool operator==(const Nat& a, const Nat& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  template <std::integral T>
  static mpz_class to_mpz(T v) {
    if constexpr (std::signed_integral<T>) {
      if (v < 0) throw_negative();
      return mpz_class(static_cast<unsigned long>(v));
    } else {
      return mpz_class(static_cast<unsigned long>(v));
    }
  }
  [[noreturn]] static void throw_negative();

  mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Nat& v);

// Parse a signed decimal integer ("-12", "+7", "40"). Throws DomainError.
Int parse_int(std::string_view text);

// Per-thread counts of big-integer operations since the last reset.
struct OpCounts {
  std::uint64_t additions = 0;
  std::uint64_t subtractions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t binomials = 0;

  std::uint64_t total() const {
    return additions + subtractions + multiplications + binomials;
  }
};

OpCounts op_counts();
void reset_op_counts();

namespace detail {
void count_binomial();
}

}  // namespace hyperseq
