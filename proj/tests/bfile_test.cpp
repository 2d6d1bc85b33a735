#include <gtest/gtest.h>

#include <sstream>

#include "hyperseq/bfile.hpp"
#include "hyperseq/errors.hpp"
#include "oracles.hpp"

using namespace hyperseq;

namespace {

std::vector<BFileEntry> fib_entries(std::int64_t first, std::int64_t last,
                                    std::int64_t offset = 0) {
  const auto f = oracle::fib_iter(static_cast<std::uint64_t>(last + 2));
  std::vector<BFileEntry> out;
  for (auto i = first; i <= last; ++i)
    out.push_back({i, f[static_cast<std::size_t>(i)] + offset});
  return out;
}

}  // namespace

TEST(ParseBFile, Examples) {
  EXPECT_EQ(parse_bfile("0 0\n1 1\n2 1\n"),
            (std::vector<BFileEntry>{{0, 0}, {1, 1}, {2, 1}}));
  EXPECT_EQ(parse_bfile("# comment\n5 12\n"), (std::vector<BFileEntry>{{5, 12}}));
  try {
    parse_bfile("3 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(ParseBFile, Tolerances) {
  EXPECT_EQ(parse_bfile("\n  \n#x\n-1 -7\r\n0   3\t\n"),
            (std::vector<BFileEntry>{{-1, -7}, {0, 3}}));
  EXPECT_EQ(parse_bfile("1 2"), (std::vector<BFileEntry>{{1, 2}}));
  std::istringstream in("# a\n1 123456789012345678901234567890\n");
  const auto e = parse_bfile(in);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].value.get_str(), "123456789012345678901234567890");
}

TEST(ParseBFile, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_bfile(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("0 0\n1\n"), 2u);
  EXPECT_EQ(line_of("0 0\n\n# c\n1 2 3\n"), 4u);
  EXPECT_EQ(line_of("a 1\n"), 1u);
  EXPECT_EQ(line_of("0 0\n1 1.5\n"), 2u);
  EXPECT_THROW(parse_bfile("2 1\n2 1\n"), FormatError);
  EXPECT_THROW(parse_bfile("2 1\n1 1\n"), FormatError);
  try {
    parse_bfile("0 0\n5 1\n4 1\n");
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Compare, BaseFibonacciMatches) {
  const auto ref = fib_entries(0, 200);
  const auto rep = compare_with_reference(SequenceKind::fib, 0, 0, ref);
  EXPECT_TRUE(rep.full_match());
  EXPECT_EQ(rep.compared, 201u);
  EXPECT_EQ(rep.n_first, 0u);
  EXPECT_EQ(rep.n_last, 200u);
}

TEST(Compare, FirstGenerationWithShift) {
  // F_{k} - 1 indexed by k, i.e. the first generation shifted by two.
  const auto ref = fib_entries(0, 120, -1);
  const auto rep = compare_with_reference(SequenceKind::fib, 1, 2, ref);
  EXPECT_TRUE(rep.full_match());
  EXPECT_EQ(rep.compared, 119u);
  EXPECT_EQ(rep.n_first, 0u);
}

TEST(Compare, MismatchReported) {
  const auto ref = fib_entries(0, 30);
  const auto rep = compare_with_reference(SequenceKind::fib, 1, 0, ref);
  EXPECT_FALSE(rep.full_match());
  ASSERT_TRUE(rep.first_mismatch);
  EXPECT_EQ(rep.first_mismatch->n, 2u);
  EXPECT_EQ(rep.first_mismatch->expected, 1);
  EXPECT_EQ(rep.first_mismatch->actual, 2);
  EXPECT_EQ(rep.matched, 2u);
}

TEST(Compare, Lucas) {
  const auto l = oracle::lucas_iter(50);
  std::vector<BFileEntry> ref;
  for (std::int64_t i = 0; i <= 50; ++i) ref.push_back({i, l[static_cast<std::size_t>(i)]});
  EXPECT_TRUE(compare_with_reference(SequenceKind::lucas, 0, 0, ref).full_match());
}

TEST(Compare, Errors) {
  const std::vector<BFileEntry> ref = {{0, 0}, {1, 1}};
  EXPECT_THROW(compare_with_reference(SequenceKind::fib, 0, 5, ref), DomainError);
  EXPECT_THROW(compare_with_reference(SequenceKind::fib, 0, 0, {}), DomainError);
  const std::vector<BFileEntry> far = {{2'000'000, 1}};
  EXPECT_THROW(compare_with_reference(SequenceKind::fib, 0, 0, far), CapacityError);
}
