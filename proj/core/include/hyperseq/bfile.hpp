#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hyperseq/limits.hpp"
#include "hyperseq/nat.hpp"

namespace hyperseq {

// One "index value" line of an OEIS b-file.
struct BFileEntry {
  std::int64_t index = 0;
  Int value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

// Blank lines and lines starting with '#' are skipped. Throws ParseError
// (with the 1-based line number) for malformed lines and FormatError when
// indices are not strictly increasing.
std::vector<BFileEntry> parse_bfile(std::string_view text);
std::vector<BFileEntry> parse_bfile(std::istream& in);

enum class SequenceKind { fib, lucas };

struct Mismatch {
  SeqIndex n = 0;                  // our index
  std::int64_t reference_index = 0;  // n + shift
  Int expected;                    // reference value
  Int actual;                      // our value
};

struct CompareReport {
  std::uint64_t matched = 0;
  std::uint64_t compared = 0;
  SeqIndex n_first = 0;
  SeqIndex n_last = 0;
  std::optional<Mismatch> first_mismatch;

  bool full_match() const { return !first_mismatch && matched == compared; }
};

// Compares our generation-r sequence at n against the reference value at
// index n + shift, for every entry whose n is >= 0. Throws DomainError when
// no entry overlaps, CapacityError when an overlapping n exceeds the linear
// index cap.
CompareReport compare_with_reference(SequenceKind kind, Generation r,
                                     std::int64_t shift,
                                     std::span<const BFileEntry> entries);

}  // namespace hyperseq
