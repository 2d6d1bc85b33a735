#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <set>

#include "hyperseq/errors.hpp"
#include "hyperseq/identity.hpp"

using namespace hyperseq;

TEST(Registry, TwentySortedUniqueIds) {
  const auto& ids = list_identities();
  ASSERT_EQ(ids.size(), 20u);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    char want[4];
    std::snprintf(want, sizeof want, "I%02zu", i + 1);
    EXPECT_EQ(ids[i].id, want);
    EXPECT_TRUE(seen.insert(ids[i].id).second);
    EXPECT_FALSE(ids[i].description.empty());
    EXPECT_FALSE(ids[i].anchor.empty());
    EXPECT_FALSE(ids[i].domain.empty());
  }
}

TEST(Registry, Domains) {
  const DomainBounds b{18};
  const auto& i16 = find_identity("I16");
  EXPECT_FALSE(i16.admits(3, 1, b));
  EXPECT_TRUE(i16.admits(2, 1, b));
  EXPECT_TRUE(i16.admits(5, 2, b));

  const auto& i03 = find_identity("I03");
  EXPECT_FALSE(i03.admits(5, 0, b));
  EXPECT_TRUE(check_identity("I03", 5, 0).passed);

  const auto& i17 = find_identity("I17");
  EXPECT_FALSE(i17.admits(2, 1, b));
  EXPECT_TRUE(i17.admits(1, 1, b));

  const auto& i12 = find_identity("I12");
  EXPECT_FALSE(i12.admits(10, 4, b));
  EXPECT_TRUE(i12.admits(11, 4, b));
}

TEST(Check, Examples) {
  auto c = check_identity("I16", 4, 1);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.lhs, 1);
  EXPECT_EQ(c.rhs, 1);

  c = check_identity("I17", 4, 1);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.lhs, 9);
  EXPECT_EQ(c.rhs, 9);

  c = check_identity("I07", 2, 1);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.lhs, 8);
  EXPECT_EQ(c.rhs, 8);
  EXPECT_EQ(c.n, 2u);
  EXPECT_EQ(c.r, 1u);
}

TEST(Check, PassedMeansEqual) {
  for (const auto& spec : list_identities()) {
    for (SeqIndex n = 0; n <= 12; ++n) {
      for (Generation r = 0; r <= 3; ++r) {
        if (spec.admits(n, r, DomainBounds{18})) continue;
        const auto c = check_identity(spec.id, n, r);
        EXPECT_EQ(c.passed, c.lhs == c.rhs) << spec.id;
        EXPECT_TRUE(c.passed) << spec.id << " n=" << n << " r=" << r;
      }
    }
  }
}

TEST(Check, Errors) {
  EXPECT_THROW(check_identity("I99", 1, 1), LookupError);
  EXPECT_THROW(find_identity("nope"), LookupError);
  try {
    check_identity("I16", 2, 1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("n >= 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(check_identity("I05", 4, 2), DomainError);
  EXPECT_THROW(check_identity("I12", 30, 0, Engine::reference(20)), DomainError);
}

TEST(Suite, DegenerateBoundsPass) {
  SuiteOptions o;
  o.n_max = 0;
  o.r_max = 0;
  o.oracle_m_max = 0;
  const auto rep = run_suite(o);
  EXPECT_EQ(rep.identities.size(), 20u);
  EXPECT_TRUE(rep.all_passed());
}

TEST(Suite, SmallRunPassesAndIsDeterministic) {
  SuiteOptions o;
  o.n_max = 30;
  o.r_max = 4;
  o.oracle_m_max = 12;
  const auto a = run_suite(o);
  EXPECT_TRUE(a.all_passed()) << to_text(a);
  o.parallel = false;
  const auto b = run_suite(o);
  EXPECT_EQ(to_text(a), to_text(b));
  EXPECT_EQ(to_lines(a), to_lines(b));
  for (const auto& r : a.identities) EXPECT_GT(r.checked, 0u) << r.id;
}

TEST(Suite, OnlyAndCapacity) {
  SuiteOptions o;
  o.n_max = 10;
  o.r_max = 2;
  o.oracle_m_max = 10;
  o.only = "I18";
  const auto rep = run_suite(o);
  ASSERT_EQ(rep.identities.size(), 1u);
  EXPECT_EQ(rep.identities[0].id, "I18");
  EXPECT_EQ(rep.identities[0].checked, 10u);

  o.only = "I77";
  EXPECT_THROW(run_suite(o), LookupError);
  o.only.reset();
  o.oracle_m_max = 41;
  EXPECT_THROW(run_suite(o), CapacityError);
}

TEST(Mutation, CorruptSeedIsCaught) {
  const auto bad = Engine::with_fib_seeds(0, 2);
  SuiteOptions o;
  o.n_max = 20;
  o.r_max = 3;
  o.oracle_m_max = 10;
  o.max_counterexamples = 3;
  const auto rep = run_suite(o, bad);
  EXPECT_FALSE(rep.all_passed());
  for (const char* id : {"I05", "I06", "I09"}) {
    const auto it = std::find_if(rep.identities.begin(), rep.identities.end(),
                                 [&](const auto& r) { return r.id == id; });
    ASSERT_NE(it, rep.identities.end());
    EXPECT_FALSE(it->passed()) << id;
    ASSERT_FALSE(it->failures.empty());
    EXPECT_LE(it->failures.size(), 3u);
    EXPECT_LE(it->failures.front().n, 3u) << id;
    EXPECT_NE(it->failures.front().lhs, it->failures.front().rhs);
  }
}

TEST(Mutation, SeededEngineKeepsGoodSeedsHonest) {
  const auto same = Engine::with_fib_seeds(0, 1);
  SuiteOptions o;
  o.n_max = 20;
  o.r_max = 3;
  o.oracle_m_max = 10;
  EXPECT_TRUE(run_suite(o, same).all_passed());
}

TEST(Report, Formats) {
  const auto bad = Engine::with_fib_seeds(0, 2);
  SuiteOptions o;
  o.n_max = 5;
  o.r_max = 1;
  o.oracle_m_max = 6;
  o.only = "I05";
  o.max_counterexamples = 2;
  const auto rep = run_suite(o, bad);
  const auto lines = to_lines(rep);
  EXPECT_EQ(lines.rfind("I05 fail ", 0), 0u) << lines;
  std::size_t count = 0;
  for (char ch : lines) count += ch == '\n';
  EXPECT_EQ(count, 3u) << lines;
  EXPECT_NE(to_text(rep).find("I05"), std::string::npos);
  EXPECT_EQ(to_text(rep).find("time_ms"), std::string::npos);
}
