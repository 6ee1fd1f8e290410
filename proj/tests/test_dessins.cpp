#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "belyi/dessins.hpp"
#include "dessin_oracle.hpp"
#include "support.hpp"

using namespace belyi;
using namespace belyi::testing;

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST(Permutations, CycleNotationRoundTrip) {
  Perm p = parse_cycles("(1 3)(2 4 5)", 5);
  EXPECT_EQ(cycle_string(p), "(1 3)(2 4 5)");
  EXPECT_EQ(cycle_type(p), (std::vector<int>{3, 2}));
  EXPECT_EQ(cycle_count(p), 2);
  EXPECT_EQ(cycle_string(perm_identity(3)), "()");
  EXPECT_EQ(perm_then(p, perm_inverse(p)), perm_identity(5));
  EXPECT_THROW(parse_cycles("(1 6)", 5), std::exception);
  EXPECT_THROW(parse_cycles("(1 2)(2 3)", 3), std::exception);
}

TEST(Triples, ValidateExamples) {
  PermutationTriple t2 = triple_validate(parse_cycles("(1 2)", 2), perm_identity(2));
  EXPECT_EQ(cycle_string(t2.sigma_inf), "(1 2)");
  Perm c3 = parse_cycles("(1 2 3)", 3);
  PermutationTriple t3 = triple_validate(c3, c3);
  EXPECT_EQ(cycle_string(t3.sigma_inf), "(1 2 3)");
  EXPECT_THROW(triple_validate(parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)), DomainError);
  // s0 s1 s_inf = 1
  EXPECT_EQ(perm_then(perm_then(t3.sigma0, t3.sigma1), t3.sigma_inf), perm_identity(3));
}

TEST(Triples, GenusExamples) {
  EXPECT_EQ(genus(triple_validate(parse_cycles("(1 2)", 2), perm_identity(2))), 0);
  Perm c3 = parse_cycles("(1 2 3)", 3);
  EXPECT_EQ(genus(triple_validate(c3, c3)), 1);
  EXPECT_EQ(genus(triple_validate(perm_identity(1), perm_identity(1))), 0);
  Passport pp = passport(triple_validate(c3, parse_cycles("(1 2)", 3)));
  EXPECT_EQ(pp.type0, (std::vector<int>{3}));
  EXPECT_EQ(pp.type1, (std::vector<int>{2, 1}));
  EXPECT_EQ(pp.genus, 0);
}

TEST(Triples, MonodromyAndBeckmannExamples) {
  auto t = [](const char* a, const char* b, int n) { return triple_validate(parse_cycles(a, n), parse_cycles(b, n)); };
  EXPECT_EQ(monodromy_order(t("(1 2)", "()", 2)), 2);
  EXPECT_EQ(monodromy_order(t("(1 2 3)", "(1 2)", 3)), 6);
  EXPECT_EQ(monodromy_order(t("(1 2 3)", "(1 2 3)", 3)), 3);
  EXPECT_EQ(beckmann_primes(t("(1 2 3)", "(1 2)", 3)), (std::vector<Integer>{2, 3}));
  EXPECT_EQ(beckmann_primes(t("(1 2)", "()", 2)), (std::vector<Integer>{2}));
  EXPECT_EQ(beckmann_primes(t("(1 2 3 4 5)", "(1 2)", 5)), (std::vector<Integer>{2, 3, 5}));
  EXPECT_EQ(monodromy_order(t("(1 2 3 4 5)", "(1 2)", 5)), 120);
  // A5 via (1 2 3 4 5) and (1 2 3)
  EXPECT_EQ(monodromy_order(t("(1 2 3 4 5)", "(1 2 3)", 5)), 60);
  EXPECT_EQ(monodromy_order(t("(1 2 3 4 5 6 7 8 9 10 11 12)", "(1 2)", 12)), factorial(12));
  CombinatoricsLimits lim;
  lim.max_monodromy_degree = 4;
  EXPECT_THROW(monodromy_order(t("(1 2 3 4 5)", "(1 2)", 5), lim), DomainError);
}

TEST(Enumeration, KnownCounts) {
  const std::vector<std::size_t> counts{1, 3, 7, 26, 97};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_dessins(n).classes.size(), counts[static_cast<std::size_t>(n - 1)]) << n;
  Census c2 = enumerate_dessins(2);
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& cl : c2.classes) got.insert({cycle_string(cl.triple.sigma0), cycle_string(cl.triple.sigma1)});
  EXPECT_EQ(got, (std::set<std::pair<std::string, std::string>>{{"()", "(1 2)"}, {"(1 2)", "()"}, {"(1 2)", "(1 2)"}}));
  CombinatoricsLimits lim;
  lim.max_enumeration_degree = 3;
  EXPECT_THROW(enumerate_dessins(4, 1, lim), DomainError);
}

// Class representatives and sizes agree with the brute-force orbit oracle;
// class sizes add up to the raw transitive-pair count.
TEST(Enumeration, MatchesBruteForceOracle) {
  for (int n = 1; n <= 5; ++n) {
    OracleCensus o = census_oracle(n);
    Census c = enumerate_dessins(n);
    ASSERT_EQ(c.classes.size(), o.classes) << n;
    ASSERT_EQ(c.raw_count(), Integer(static_cast<unsigned long>(o.raw))) << n;
    for (const auto& cl : c.classes) {
      auto it = o.class_sizes.find({cl.triple.sigma0, cl.triple.sigma1});
      ASSERT_NE(it, o.class_sizes.end()) << n << " " << cycle_string(cl.triple.sigma0);
      ASSERT_EQ(cl.class_size, Integer(static_cast<unsigned long>(it->second)));
    }
  }
}

TEST(Enumeration, PropertyInvariantsPerClass) {
  for (int n = 1; n <= 5; ++n) {
    Census c = enumerate_dessins(n, 2);
    Census serial = enumerate_dessins(n, 1);
    ASSERT_EQ(c.classes.size(), serial.classes.size());
    Integer raw = 0;
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
      const auto& t = c.classes[i].triple;
      ASSERT_EQ(t.sigma0, serial.classes[i].triple.sigma0);
      ASSERT_EQ(t.sigma1, serial.classes[i].triple.sigma1);
      // Riemann-Hurwitz: 2 - 2g = c0 + c1 + c_inf - n
      const int chi = cycles_oracle(t.sigma0) + cycles_oracle(t.sigma1) + cycles_oracle(t.sigma_inf) - n;
      ASSERT_EQ(chi % 2, 0);
      ASSERT_EQ(genus(t), 1 - chi / 2);
      ASSERT_GE(genus(t), 0);
      ASSERT_EQ(compose_oracle(compose_oracle(t.sigma0, t.sigma1), t.sigma_inf), perm_identity(n));
      Integer order = monodromy_order(t);
      ASSERT_EQ(order, Integer(static_cast<unsigned long>(group_order_oracle(t.sigma0, t.sigma1))));
      ASSERT_TRUE(factorial(n) % order == 0);
      for (const auto& p : beckmann_primes(t)) ASSERT_LE(p, n);
      // the class size is the index of the centralizer: divides n!
      ASSERT_TRUE(factorial(n) % c.classes[i].class_size == 0);
      raw += c.classes[i].class_size;
    }
    ASSERT_EQ(raw, c.raw_count());
  }
}

TEST(Enumeration, DegreeSixCount) { EXPECT_EQ(enumerate_dessins(6).classes.size(), 624u); }
