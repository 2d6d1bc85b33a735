#include "hyperseq/nat.hpp"

#include <ostream>

#include "hyperseq/errors.hpp"
#include "hyperseq/limits.hpp"

namespace hyperseq {

namespace {

thread_local OpCounts g_counts;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Nat::Nat(const Int& v) : value_(v) {
  if (sgn(v) < 0) throw_negative();
}

void Nat::throw_negative() {
  throw DomainError("negative value cannot be a Nat");
}

Nat Nat::parse(std::string_view text) {
  if (!all_digits(text)) {
    throw DomainError("not a nonnegative decimal integer: '" +
                      std::string(text) + "'");
  }
  Nat out;
  out.value_.set_str(std::string(text), 10);
  return out;
}

std::size_t Nat::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Nat& Nat::operator+=(const Nat& rhs) {
  ++g_counts.additions;
  value_ += rhs.value_;
  return *this;
}

Nat& Nat::operator*=(const Nat& rhs) {
  ++g_counts.multiplications;
  value_ *= rhs.value_;
  return *this;
}

Nat Nat::checked_sub(const Nat& rhs) const {
  ++g_counts.subtractions;
  if (cmp(value_, rhs.value_) < 0) {
    throw InvariantError("Nat subtraction underflow: " + str() + " - " +
                         rhs.str());
  }
  Nat out;
  out.value_ = value_ - rhs.value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Nat& v) {
  return os << v.raw();
}

Int parse_int(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  }
  Int out(std::string(digits), 10);
  return negative ? Int(-out) : out;
}

OpCounts op_counts() { return g_counts; }
void reset_op_counts() { g_counts = OpCounts{}; }

namespace detail {
void count_binomial() { ++g_counts.binomials; }
}  // namespace detail

void require_generation(Generation r) {
  if (r > kMaxGeneration) {
    throw CapacityError("generation r = " + std::to_string(r) +
                        " exceeds the cap of " +
                        std::to_string(kMaxGeneration));
  }
}

void require_linear_index(SeqIndex n) {
  if (n > kMaxLinearIndex) {
    throw CapacityError("index n = " + std::to_string(n) +
                        " exceeds the cap of " +
                        std::to_string(kMaxLinearIndex) +
                        " for linear strategies");
  }
}

void require_point_index(SeqIndex n) {
  if (n > kMaxPointIndex) {
    throw CapacityError("index n = " + std::to_string(n) +
                        " exceeds the cap of " +
                        std::to_string(kMaxPointIndex) +
                        " for point queries");
  }
}

}  // namespace hyperseq
