#include "support.hpp"

#include <gtest/gtest.h>

namespace latdeg {
namespace {

using testing::Rng;

const ZMatrix kExample2{{18, -18, 0}, {45, 0, -45}, {0, 10, -10}};
const ZMatrix kExample3{{-1, 2, -1}};

TEST(HilbertProfile, Example3MatchesPairwiseCosetCount) {
  const HomogeneousLattice l(kExample3);
  const auto p = hilbert_profile(l, 12);
  ASSERT_EQ(p.values.size(), 13u);
  for (int d = 0; d <= 7; ++d) {
    // a - b = k(-1,2,-1) with |k| <= d for any two degree-d exponent vectors.
    const auto expected = testing::pairwise_coset_count(
        3, d, [&](const ZVector& v) { return testing::brute_force_contains(l.generators(), v, d); });
    EXPECT_EQ(p.values[d], expected) << "d = " << d;
  }
  for (std::size_t d = 0; d < p.values.size(); ++d) EXPECT_EQ(p.values[d], 2 * d + 1);
  EXPECT_FALSE(p.stabilization_degree.has_value());
  EXPECT_EQ(p.degree_estimate, BigInt(2));
  EXPECT_EQ(p.krull_dim_estimate, 2u);
}

TEST(HilbertProfile, Example2IncreasesThenHoldsAt90) {
  const HomogeneousLattice l(kExample2);
  const auto p = hilbert_profile(l, 60);
  EXPECT_EQ(p.values.front(), 1u);
  EXPECT_EQ(p.values.back(), 90u);
  EXPECT_TRUE(is_increasing_then_constant(p.values));
  ASSERT_TRUE(p.stabilization_degree.has_value());
  EXPECT_EQ(p.degree_estimate, BigInt(90));
  EXPECT_EQ(p.krull_dim_estimate, 1u);
}

TEST(HilbertProfile, ZeroLatticeInTwoVariables) {
  const HomogeneousLattice l(ZMatrix(0, 2));
  const auto p = hilbert_profile(l, 15);
  for (std::size_t d = 0; d < p.values.size(); ++d) EXPECT_EQ(p.values[d], d + 1);
}

TEST(HilbertProfile, SingleVariable) {
  const HomogeneousLattice l(ZMatrix(0, 1));
  const auto p = hilbert_profile(l, 4);
  EXPECT_EQ(p.values, (std::vector<std::uint64_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(p.stabilization_degree, 0u);
}

TEST(HilbertProfile, BudgetExceeded) {
  const HomogeneousLattice l(kExample2);
  try {
    hilbert_profile(l, 200, {.budget = 1000});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.needed(), to_string(monomial_count(200, 3)));
    EXPECT_EQ(e.budget(), "1000");
  }
}

TEST(HilbertProfile, MonomialCountMatchesEnumeration) {
  for (std::size_t s = 1; s <= 4; ++s)
    for (int d = 0; d <= 6; ++d) {
      std::size_t total = 0;
      for (int k = 0; k <= d; ++k) total += testing::exponent_vectors(s, k).size();
      EXPECT_EQ(monomial_count(d, s), total);
    }
}

TEST(HilbertProfile, ThreadedCountMatchesSequential) {
  Rng rng(201);
  for (int trial = 0; trial < 6; ++trial) {
    const HomogeneousLattice l = testing::random_full_rank_lattice(rng, 3 + trial % 2, 4);
    const auto one = hilbert_profile(l, 25, {.budget = 10'000'000, .threads = 1});
    const auto four = hilbert_profile(l, 25, {.budget = 10'000'000, .threads = 4});
    EXPECT_EQ(one.values, four.values);
  }
}

TEST(HilbertProfile, PositiveBelowFullRank) {
  Rng rng(202);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t s = 3 + trial % 2;
    const std::size_t m = 1 + rng() % (s - 2);
    const HomogeneousLattice l(testing::random_homogeneous_generators(rng, m, s, 5));
    ASSERT_LT(l.rank(), s);
    const auto p = hilbert_profile(l, 12);
    EXPECT_EQ(p.values.front(), 1u);
    for (auto h : p.values) EXPECT_GE(h, 1u);
  }
}

TEST(CosetLabel, EqualLabelsExactlyForLatticeDifferences) {
  Rng rng(203);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t s = 2 + trial % 3;
    const HomogeneousLattice l = trial % 4 == 3
                                     ? HomogeneousLattice(testing::random_homogeneous_generators(rng, 1, s, 4))
                                     : testing::random_full_rank_lattice(rng, s, 4);
    for (int d = 0; d <= 4; ++d) {
      const auto vs = testing::exponent_vectors(s, d);
      for (const auto& a : vs)
        for (const auto& b : vs) {
          ZVector diff(s);
          for (std::size_t k = 0; k < s; ++k) diff[k] = a[k] - b[k];
          EXPECT_EQ(coset_label(l, a) == coset_label(l, b), lattice_contains(l, diff));
        }
    }
  }
}

TEST(CosetLabel, WideAndNarrowLabelersAgree) {
  Rng rng(204);
  for (int trial = 0; trial < 5; ++trial) {
    const HomogeneousLattice l = testing::random_full_rank_lattice(rng, 3, 6);
    const detail::CosetLabeler<std::int64_t> narrow(l);
    const detail::CosetLabeler<BigInt> wide(l);
    for (std::uint64_t d = 0; d <= 20; ++d)
      EXPECT_EQ(detail::count_cosets(narrow, 3, d, 1), detail::count_cosets(wide, 3, d, 1));
  }
}

TEST(HilbertProfile, MatchesPairwiseOracleOnRandomLattices) {
  Rng rng(205);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t s = 2 + trial % 2;
    const HomogeneousLattice l = testing::random_full_rank_lattice(rng, s, 3);
    const auto p = hilbert_profile(l, 6);
    for (int d = 0; d <= 6; ++d) {
      const auto expected =
          testing::pairwise_coset_count(s, d, [&](const ZVector& v) { return lattice_contains(l, v); });
      EXPECT_EQ(p.values[d], expected);
    }
  }
}

TEST(OracleDegree, FromRawProfiles) {
  EXPECT_EQ(oracle_degree(analyze_profile({1, 3, 5, 7, 9, 11, 13}, 3)), 2);
  EXPECT_EQ(oracle_degree(analyze_profile({1, 1, 1, 1}, 3)), 1);
  EXPECT_EQ(oracle_degree(analyze_profile({1, 2, 3, 3, 3}, 2)), 3);
  // Second differences constant: quadratic growth.
  EXPECT_EQ(oracle_degree(analyze_profile({1, 4, 10, 19, 31, 46, 64}, 3)), 3);
}

TEST(OracleDegree, NotStabilized) {
  EXPECT_THROW(oracle_degree(analyze_profile({1, 3}, 3)), NotStabilized);
  EXPECT_THROW(oracle_degree(analyze_profile({1, 3, 6, 7}, 4)), NotStabilized);
}

TEST(OracleDegree, Example2ProfilePastTheBound) {
  const HomogeneousLattice l(kExample2);
  const auto bound = static_cast<std::size_t>(regularity_upper_bound(l));
  EXPECT_EQ(oracle_degree(hilbert_profile(l, bound + 3)), 90);
}

TEST(VerifyDegree, Example2) {
  const auto r = verify_degree(HomogeneousLattice(kExample2));
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.snf_degree, 90);
  EXPECT_EQ(r.oracle_degree, 90);
  EXPECT_TRUE(r.stabilization_within_bound);
}

TEST(VerifyDegree, SingleRelation) {
  const auto r = verify_degree(HomogeneousLattice(ZMatrix{{3, -3}}));
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.snf_degree, 3);
  EXPECT_EQ(r.oracle_degree, 3);
  // Degree-d monomials t1^a t2^(d-a) fall into classes by a mod 3.
  const std::vector<std::uint64_t> prefix(r.profile.values.begin(), r.profile.values.begin() + 5);
  EXPECT_EQ(prefix, (std::vector<std::uint64_t>{1, 2, 3, 3, 3}));
}

TEST(VerifyDegree, TorsionFree) {
  const auto r = verify_degree(HomogeneousLattice(ZMatrix{{1, 0, -1}, {0, 1, -1}}));
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.snf_degree, 1);
  EXPECT_EQ(r.observed_stabilization, 0u);
  for (auto h : r.profile.values) EXPECT_EQ(h, 1u);
}

TEST(VerifyDegree, Errors) {
  EXPECT_THROW(verify_degree(HomogeneousLattice(kExample3)), RankMismatch);
  EXPECT_THROW(verify_degree(HomogeneousLattice(kExample2), {.budget = 100}), BudgetExceeded);
}

TEST(VerifyDegree, RandomLatticesAgreeAndStabilizeWithinBound) {
  Rng rng(206);
  int verified = 0;
  for (int trial = 0; trial < 60 && verified < 30; ++trial) {
    const HomogeneousLattice l = testing::random_full_rank_lattice(rng, 2 + trial % 3, 4);
    DegreeVerification r;
    try {
      r = verify_degree(l, {.budget = 300'000});
    } catch (const BudgetExceeded&) {
      continue;
    }
    ++verified;
    EXPECT_TRUE(r.agree);
    EXPECT_TRUE(r.stabilization_within_bound);
    EXPECT_TRUE(is_increasing_then_constant(r.profile.values));
  }
  EXPECT_GE(verified, 20);
}

TEST(IsIncreasingThenConstant, Shapes) {
  EXPECT_TRUE(is_increasing_then_constant({1, 3, 5, 5, 5}));
  EXPECT_TRUE(is_increasing_then_constant({1, 2, 3}));
  EXPECT_TRUE(is_increasing_then_constant({1, 1, 1}));
  EXPECT_FALSE(is_increasing_then_constant({1, 2, 2, 3}));
  EXPECT_FALSE(is_increasing_then_constant({1, 3, 2}));
}

}  // namespace
}  // namespace latdeg
