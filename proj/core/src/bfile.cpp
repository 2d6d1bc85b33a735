#include "hyperseq/bfile.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <string>

#include "hyperseq/errors.hpp"
#include "hyperseq/sequence.hpp"

namespace hyperseq {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view next_token(std::string_view& s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  std::size_t len = 0;
  while (len < s.size() && !is_space(s[len])) ++len;
  std::string_view tok = s.substr(0, len);
  s.remove_prefix(len);
  return tok;
}

BFileEntry parse_line(std::string_view line, std::size_t line_no) {
  std::string_view rest = line;
  const std::string_view index_tok = next_token(rest);
  const std::string_view value_tok = next_token(rest);
  if (value_tok.empty() || !trim(rest).empty()) {
    throw ParseError(line_no, "expected 'index value', got '" +
                                  std::string(line) + "'");
  }

  BFileEntry entry;
  std::string_view digits = index_tok;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), entry.index);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError(line_no, "bad index '" + std::string(index_tok) + "'");
  }
  try {
    entry.value = parse_int(value_tok);
  } catch (const DomainError&) {
    throw ParseError(line_no, "bad value '" + std::string(value_tok) + "'");
  }
  return entry;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    BFileEntry entry = parse_line(line, line_no);
    if (!entries.empty() && entry.index <= entries.back().index) {
      throw FormatError(line_no, "index " + std::to_string(entry.index) +
                                     " does not increase past " +
                                     std::to_string(entries.back().index));
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  return parse_bfile(std::string_view(text));
}

CompareReport compare_with_reference(SequenceKind kind, Generation r,
                                     std::int64_t shift,
                                     std::span<const BFileEntry> entries) {
  std::vector<std::pair<SeqIndex, const BFileEntry*>> overlap;
  for (const auto& e : entries) {
    if (e.index < shift) continue;
    // index >= shift, so the difference fits in 64 unsigned bits.
    const SeqIndex n =
        static_cast<SeqIndex>(e.index) - static_cast<SeqIndex>(shift);
    if (n > kMaxLinearIndex) {
      throw CapacityError("reference index " + std::to_string(e.index) +
                          " maps past the linear index cap");
    }
    overlap.emplace_back(n, &e);
  }
  if (overlap.empty()) {
    throw DomainError("no reference entry overlaps our index range n >= 0");
  }

  SeqIndex n_max = 0;
  for (const auto& item : overlap) n_max = std::max(n_max, item.first);
  const auto ours = kind == SequenceKind::fib ? hyper_fib_cumsum(r, n_max)
                                              : hyper_lucas_cumsum(r, n_max);

  CompareReport report;
  report.n_first = overlap.front().first;
  report.n_last = n_max;
  for (const auto& [n, entry] : overlap) {
    ++report.compared;
    const Int actual = ours[n].to_int();
    if (actual == entry->value) {
      ++report.matched;
    } else if (!report.first_mismatch) {
      report.first_mismatch = Mismatch{n, entry->index, entry->value, actual};
    }
  }
  return report;
}

}  // namespace hyperseq
