#include "hyperseq/tiling.hpp"

#include <algorithm>

#include "hyperseq/errors.hpp"
#include "hyperseq/sequence.hpp"

namespace hyperseq {

namespace {

void require_within_cap(std::uint64_t m, std::uint64_t cap) {
  if (m > cap) {
    throw CapacityError("board length " + std::to_string(m) +
                        " exceeds the enumeration cap of " +
                        std::to_string(cap));
  }
}

// Lexicographically smallest tiling of `length` cells with at least `need`
// dominoes: squares first, then the required dominoes.
void append_smallest_completion(std::vector<Tile>& tiles, std::uint64_t length,
                                std::uint64_t need) {
  tiles.insert(tiles.end(), length - 2 * need, Tile::square);
  tiles.insert(tiles.end(), need, Tile::domino);
}

std::uint64_t nonempty_bracelet(std::uint64_t m) {
  if (m == 0) {
    throw DomainError(
        "bracelets need at least one cell; the m = 0 convention is only "
        "available from count_bracelet");
  }
  return m;
}

void expect_equal(const Nat& got, const Nat& want, const char* what,
                  std::uint64_t m, Generation r) {
  if (got != want) {
    throw InvariantError(std::string(what) + " mismatch at m = " +
                         std::to_string(m) + ", r = " + std::to_string(r) +
                         ": enumerated " + got.str() + ", formula " +
                         want.str());
  }
}

}  // namespace

Tiling Tiling::parse(std::string_view text) {
  std::vector<Tile> tiles;
  tiles.reserve(text.size());
  for (char c : text) {
    if (c == '1') {
      tiles.push_back(Tile::square);
    } else if (c == '2') {
      tiles.push_back(Tile::domino);
    } else {
      throw DomainError("tiling text may only contain '1' and '2'");
    }
  }
  return Tiling(std::move(tiles));
}

std::uint64_t Tiling::board_length() const noexcept {
  std::uint64_t cells = 0;
  for (Tile t : tiles_) cells += static_cast<std::uint64_t>(t);
  return cells;
}

std::uint64_t Tiling::domino_count() const noexcept {
  return static_cast<std::uint64_t>(
      std::count(tiles_.begin(), tiles_.end(), Tile::domino));
}

std::string Tiling::render() const {
  std::string out;
  out.reserve(tiles_.size());
  for (Tile t : tiles_) out.push_back(t == Tile::square ? '1' : '2');
  return out;
}

std::string Bracelet::render() const {
  return (out_of_phase ? "O:" : "P:") + body.render();
}

BoardEnumerator::BoardEnumerator(std::uint64_t m, std::uint64_t min_dominoes,
                                 std::uint64_t cap)
    : m_(m), min_dominoes_(min_dominoes) {
  require_within_cap(m, cap);
  current_.reserve(m);
}

std::optional<Tiling> BoardEnumerator::next() {
  if (!advance()) return std::nullopt;
  return Tiling(current_);
}

bool BoardEnumerator::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (2 * min_dominoes_ > m_) {
      done_ = true;
      return false;
    }
    append_smallest_completion(current_, m_, min_dominoes_);
    return true;
  }

  // Successor: bump the rightmost square that can become a domino while a
  // valid completion still exists, then append the smallest completion.
  std::uint64_t cells_before = m_;
  std::uint64_t dominoes_before = 0;
  for (Tile t : current_) dominoes_before += t == Tile::domino ? 1 : 0;

  for (std::size_t j = current_.size(); j-- > 0;) {
    const bool is_square = current_[j] == Tile::square;
    cells_before -= static_cast<std::uint64_t>(current_[j]);
    if (!is_square) {
      --dominoes_before;
      continue;
    }
    if (cells_before + 2 > m_) continue;
    const std::uint64_t rest = m_ - cells_before - 2;
    const std::uint64_t have = dominoes_before + 1;
    if (have + rest / 2 < min_dominoes_) continue;

    current_.resize(j);
    current_.push_back(Tile::domino);
    const std::uint64_t need = min_dominoes_ > have ? min_dominoes_ - have : 0;
    append_smallest_completion(current_, rest, need);
    return true;
  }
  done_ = true;
  return false;
}

BraceletEnumerator::BraceletEnumerator(std::uint64_t m,
                                       std::uint64_t min_dominoes,
                                       std::uint64_t cap)
    : in_phase_(nonempty_bracelet(m), min_dominoes, cap) {
  if (m >= 2) {
    out_of_phase_.emplace(m - 2, min_dominoes > 0 ? min_dominoes - 1 : 0,
                          cap);
  }
}

std::optional<Bracelet> BraceletEnumerator::next() {
  if (auto body = in_phase_.next()) {
    return Bracelet{false, std::move(*body)};
  }
  if (out_of_phase_) {
    if (auto body = out_of_phase_->next()) {
      return Bracelet{true, std::move(*body)};
    }
  }
  return std::nullopt;
}

Nat count_board(std::uint64_t m, std::uint64_t min_dominoes) {
  Nat total = 0;
  for (std::uint64_t k = min_dominoes; 2 * k <= m; ++k) {
    total += binom(m - k, static_cast<std::int64_t>(k));
  }
  return total;
}

BraceletCount count_bracelet(std::uint64_t m, std::uint64_t min_dominoes) {
  if (m == 0) {
    if (min_dominoes == 0) return {2, true};
    return {0, false};
  }
  Nat total = count_board(m, min_dominoes);
  if (m >= 2) {
    total += count_board(m - 2, min_dominoes > 0 ? min_dominoes - 1 : 0);
  }
  return {std::move(total), false};
}

std::uint64_t enumerate_board_count(std::uint64_t m, std::uint64_t min_dominoes,
                                    std::uint64_t cap) {
  BoardEnumerator it(m, min_dominoes, cap);
  std::uint64_t count = 0;
  while (it.next()) ++count;
  return count;
}

std::uint64_t enumerate_bracelet_count(std::uint64_t m,
                                       std::uint64_t min_dominoes,
                                       std::uint64_t cap) {
  BraceletEnumerator it(m, min_dominoes, cap);
  std::uint64_t count = 0;
  while (it.next()) ++count;
  return count;
}

std::map<std::uint64_t, Nat> domino_histogram_board(std::uint64_t m,
                                                    std::uint64_t cap) {
  std::map<std::uint64_t, std::uint64_t> counts;
  BoardEnumerator it(m, 0, cap);
  while (auto t = it.next()) ++counts[t->domino_count()];
  std::map<std::uint64_t, Nat> out;
  for (auto [k, c] : counts) out.emplace(k, c);
  return out;
}

LastTileClassification classify_board_by_last_tile(std::uint64_t m,
                                                   Generation r,
                                                   std::uint64_t cap) {
  require_generation(r);
  if (m < 2 || m < 2 * r + 1) {
    throw DomainError("classify_board_by_last_tile needs m >= 2 and m >= 2r+1");
  }
  std::uint64_t square = 0;
  std::uint64_t set_a = 0;
  std::uint64_t set_b = 0;
  BoardEnumerator it(m, r, cap);
  while (auto t = it.next()) {
    if (!t->ends_with_domino()) {
      ++square;
    } else if (t->domino_count() == r) {
      ++set_a;
    } else {
      ++set_b;
    }
  }

  LastTileClassification out{square, set_a, set_b, square + set_a + set_b};
  const SeqIndex n = m - 2 * r - 1;
  const auto row = hyper_fib_cumsum(r, n + 1);
  expect_equal(out.square_ending, row[n + 1], "square-ending count", m, r);
  expect_equal(out.exactly_r_domino_ending,
               binom(n + r, static_cast<std::int64_t>(r) - 1), "set A", m, r);
  expect_equal(out.at_least_r_plus_1_domino_ending, row[n], "set B", m, r);
  return out;
}

PhaseClassification classify_bracelet_by_phase(std::uint64_t m, Generation r,
                                               std::uint64_t cap) {
  require_generation(r);
  if (m < 2 || m < 2 * r) {
    throw DomainError("classify_bracelet_by_phase needs m >= 2 and m >= 2r");
  }
  std::uint64_t in_phase = 0;
  std::uint64_t exactly = 0;
  std::uint64_t more = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;
  BraceletEnumerator it(m, r, cap);
  while (auto b = it.next()) {
    if (!b->out_of_phase) {
      ++in_phase;
      continue;
    }
    const std::uint64_t d = b->domino_count();
    ++histogram[d];
    if (d == r) {
      ++exactly;
    } else {
      ++more;
    }
  }

  PhaseClassification out;
  out.in_phase = in_phase;
  out.out_of_phase_exactly_r = exactly;
  out.out_of_phase_at_least_r_plus_1 = more;
  out.total = in_phase + exactly + more;
  for (auto [k, c] : histogram) out.out_of_phase_histogram.emplace(k, c);

  const SeqIndex n = m - 2 * r;
  const auto row = hyper_fib_cumsum(r, n + 1);
  expect_equal(out.in_phase, row[n + 1], "in-phase count", m, r);
  if (n >= 1) {
    expect_equal(out.out_of_phase_exactly_r,
                 binom(n + r - 1, static_cast<std::int64_t>(r) - 1),
                 "out-of-phase set A", m, r);
    expect_equal(out.out_of_phase_at_least_r_plus_1, row[n - 1],
                 "out-of-phase set B", m, r);
  }
  return out;
}

}  // namespace hyperseq
