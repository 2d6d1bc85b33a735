#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperseq/limits.hpp"
#include "hyperseq/nat.hpp"

/// Square/domino tilings of boards and bracelets.
///
/// The enumerators are brute-force oracles: they walk every tiling in
/// lexicographic order (square before domino, leftmost tile most
/// significant) with O(m) state, and never materialize the full set. The
/// count_* functions are the binomial closed forms the enumerators are
/// checked against.
namespace hyperseq {

enum class Tile : std::uint8_t { square = 1, domino = 2 };

class Tiling {
 public:
  Tiling() = default;
  explicit Tiling(std::vector<Tile> tiles) : tiles_(std::move(tiles)) {}

  // Inverse of render(); throws DomainError on characters other than 1/2.
  static Tiling parse(std::string_view text);

  std::span<const Tile> tiles() const noexcept { return tiles_; }
  std::uint64_t board_length() const noexcept;
  std::uint64_t domino_count() const noexcept;
  bool ends_with_domino() const noexcept {
    return !tiles_.empty() && tiles_.back() == Tile::domino;
  }

  // "1" per square, "2" per domino, left to right.
  std::string render() const;

  friend bool operator==(const Tiling&, const Tiling&) = default;
  friend auto operator<=>(const Tiling&, const Tiling&) = default;

 private:
  std::vector<Tile> tiles_;
};

// A circular tiling. Out of phase means one domino covers cells (m, 1); the
// body then tiles cells 2..m-1. In phase means the body tiles all m cells.
struct Bracelet {
  bool out_of_phase = false;
  Tiling body;

  std::uint64_t length() const noexcept {
    return body.board_length() + (out_of_phase ? 2 : 0);
  }
  std::uint64_t domino_count() const noexcept {
    return body.domino_count() + (out_of_phase ? 1 : 0);
  }
  // "P:<body>" or "O:<body>".
  std::string render() const;

  friend bool operator==(const Bracelet&, const Bracelet&) = default;
};

// Streams every m-board tiling with at least `min_dominoes` dominoes.
class BoardEnumerator {
 public:
  // Throws CapacityError if m > cap.
  BoardEnumerator(std::uint64_t m, std::uint64_t min_dominoes,
                  std::uint64_t cap = kDefaultEnumerationCap);

  std::optional<Tiling> next();

 private:
  bool advance();

  std::uint64_t m_;
  std::uint64_t min_dominoes_;
  std::vector<Tile> current_;
  bool started_ = false;
  bool done_ = false;
};

// Streams the in-phase block, then the out-of-phase block.
class BraceletEnumerator {
 public:
  // Throws DomainError if m = 0, CapacityError if m > cap.
  BraceletEnumerator(std::uint64_t m, std::uint64_t min_dominoes,
                     std::uint64_t cap = kDefaultEnumerationCap);

  std::optional<Bracelet> next();

 private:
  BoardEnumerator in_phase_;
  std::optional<BoardEnumerator> out_of_phase_;
};

// Number of m-board tilings with at least min_dominoes dominoes,
// sum_{k >= min} C(m - k, k). No cap.
Nat count_board(std::uint64_t m, std::uint64_t min_dominoes);

struct BraceletCount {
  Nat count;
  // True only for m = 0, where the value 2 is a bookkeeping convention
  // (two phantom bracelets) rather than a count of objects.
  bool by_convention = false;
};

BraceletCount count_bracelet(std::uint64_t m, std::uint64_t min_dominoes);

// Board counts follow f_0^(r) := 1 only for r = 0, where the empty tiling
// exists. For r >= 1 count_board(0, r) is 0 and the convention value lives
// here.
inline constexpr std::uint64_t kEmptyBoardConvention = 1;

// Enumeration-backed counts.
std::uint64_t enumerate_board_count(std::uint64_t m, std::uint64_t min_dominoes,
                                    std::uint64_t cap = kDefaultEnumerationCap);
std::uint64_t enumerate_bracelet_count(
    std::uint64_t m, std::uint64_t min_dominoes,
    std::uint64_t cap = kDefaultEnumerationCap);

// Domino count -> number of unconstrained m-board tilings, by enumeration.
std::map<std::uint64_t, Nat> domino_histogram_board(
    std::uint64_t m, std::uint64_t cap = kDefaultEnumerationCap);

struct LastTileClassification {
  Nat square_ending;
  Nat exactly_r_domino_ending;          // set A
  Nat at_least_r_plus_1_domino_ending;  // set B
  Nat total;
};

// Splits the m-board tilings with >= r dominoes by their last tile and, for
// domino endings, by whether the domino count is exactly r. With
// n = m - 2r - 1 the parts must be F_{n+1}^(r), C(n + r, r - 1), F_n^(r);
// a mismatch throws InvariantError.
// Requires m >= 2 and m >= 2r + 1 (DomainError), m <= cap (CapacityError).
LastTileClassification classify_board_by_last_tile(
    std::uint64_t m, Generation r, std::uint64_t cap = kDefaultEnumerationCap);

struct PhaseClassification {
  Nat in_phase;
  Nat out_of_phase_exactly_r;
  Nat out_of_phase_at_least_r_plus_1;
  Nat total;
  // Total domino count (wrap domino included) -> out-of-phase bracelets.
  std::map<std::uint64_t, Nat> out_of_phase_histogram;
};

// Splits the m-bracelets with >= r dominoes by phase, and the out-of-phase
// ones by whether they have exactly r dominoes. With n = m - 2r the parts
// must be F_{n+1}^(r), C(n + r - 1, r - 1), F_{n-1}^(r); the last two are
// only checked for n >= 1. A mismatch throws InvariantError.
// Requires m >= 2 and m >= 2r (DomainError), m <= cap (CapacityError).
PhaseClassification classify_bracelet_by_phase(
    std::uint64_t m, Generation r, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace hyperseq
