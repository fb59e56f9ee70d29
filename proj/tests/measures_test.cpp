#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace {

using namespace rctest;

TEST(KappaSeries, WorkedExampleExact) {
  const auto prof = kappa_series(example_set(), MeasureParams{});
  ASSERT_TRUE(prof.exact);
  EXPECT_EQ(prof.exact_series,
            (std::vector<BigCount>{BigCount(5), BigCount(7), BigCount(4), BigCount(1)}));
  EXPECT_EQ(prof.ell, 4u);
  EXPECT_EQ(prof.exact_total, BigCount(17));
  EXPECT_EQ(prof.total, 17.0);
  EXPECT_EQ(longest_common_length(prof), 4u);
}

TEST(KappaSeries, SingleRankingCountsAllSubsequences) {
  for (int n = 1; n <= 16; ++n) {
    std::string r;
    for (int i = 0; i < n; ++i) r += static_cast<char>('a' + i);
    const auto prof = kappa_series(letters({r}), MeasureParams{});
    EXPECT_EQ(prof.exact_total, (BigCount(1) << n) - 1) << "n=" << n;
    EXPECT_EQ(prof.ell, static_cast<std::size_t>(n));
  }
}

TEST(KappaSeries, ExactPathBeyondDoublePrecision) {
  TokenGroups groups;
  for (int i = 0; i < 80; ++i) groups.push_back({"t" + std::to_string(i)});
  std::vector<TokenGroups> rankings{groups, groups};
  const auto set = RankingSet::from_groups(rankings);
  const auto prof = kappa_series(set, MeasureParams{});
  EXPECT_EQ(prof.exact_total, (BigCount(1) << 80) - 1);
  EXPECT_EQ(kappa_total_closed_exact(build_matrix(set, MeasureParams{})),
            (BigCount(1) << 80) - 1);
}

TEST(KappaSeries, DisjointIsEmpty) {
  for (const auto& p : {MeasureParams{}, weighted(0.5, 0.5)}) {
    const auto prof = kappa_series(letters({"abc", "xyz"}), p);
    EXPECT_TRUE(prof.series.empty());
    EXPECT_EQ(prof.ell, 0u);
    EXPECT_EQ(prof.total, 0.0);
  }
}

TEST(KappaSeries, IdenticalRankingsHaveFullLength) {
  const auto prof = kappa_series(letters({"abcde", "abcde", "abcde"}), MeasureParams{});
  EXPECT_EQ(prof.ell, 5u);
  EXPECT_EQ(prof.exact_total, BigCount(31));
}

TEST(KappaSeries, WeightedExampleByHand) {
  // Two rankings "ab" and "ba" share no ordered pair: kappa = theta(a) + theta(b).
  const auto set = letters({"ab", "ba"});
  const auto p = weighted(0.5, 0.5);
  const auto prof = kappa_series(set, p);
  // Each item sits at positions 1 and 2: spread 0.5 under every variant.
  EXPECT_EQ(prof.ell, 1u);
  EXPECT_DOUBLE_EQ(prof.total, 2.0 * std::pow(0.5, 0.5));
}

TEST(KappaSeries, WeightedChainByHand) {
  // Identical rankings: spreads are 0, every gap is j - i.
  const auto set = letters({"abc", "abc"});
  const auto prof = kappa_series(set, weighted(0.9, 0.5));
  ASSERT_EQ(prof.ell, 3u);
  EXPECT_DOUBLE_EQ(prof.kappa(1), 3.0);
  EXPECT_DOUBLE_EQ(prof.kappa(2), 0.5 + 0.25 + 0.5);
  EXPECT_DOUBLE_EQ(prof.kappa(3), 0.25);
  EXPECT_DOUBLE_EQ(prof.kappa(4), 0.0);
}

TEST(KappaSeries, EpsilonTruncates) {
  const auto set = letters({"abc", "abc"});
  auto p = weighted(0.9, 0.5);
  p.epsilon = 0.3;
  const auto prof = kappa_series(set, p);
  EXPECT_EQ(prof.ell, 2u);
}

TEST(ClosedForm, MatchesSeries) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto set = random_set(rng, 3, 9, trial % 2 == 0, trial % 3 == 0);
    for (const auto& p : {MeasureParams{}, weighted(0.9, 0.7), weighted(0.45, 0.45)}) {
      const auto m = build_matrix(set, p);
      const auto prof = kappa_series(m, p);
      EXPECT_NEAR(kappa_total_closed(m), prof.total, 1e-9 * std::max(1.0, prof.total));
      if (p.is_exact()) {
        EXPECT_EQ(kappa_total_closed_exact(m), prof.exact_total);
      }
    }
  }
}

TEST(ClosedForm, ExampleAndEmpty) {
  EXPECT_DOUBLE_EQ(kappa_total_closed(build_matrix(example_set(), MeasureParams{})), 17.0);
  EXPECT_EQ(kappa_total_closed(build_matrix(letters({"abc", "xyz"}), MeasureParams{})), 0.0);
}

TEST(ClosedForm, ConsensusExperimentCorner) {
  const auto set = to_ranking_set(load_dataset(Dataset::clustering_ce));
  EXPECT_EQ(kappa_total_closed(build_matrix(set, MeasureParams{})), 19.0);
}

TEST(KappaDup, DuplicatedExample) {
  const auto set = to_ranking_set(parse_text(read_file(data_path("example_duplicates.txt"))));
  EXPECT_DOUBLE_EQ(kappa_dup(set, MeasureParams{}), 24.0);
}

TEST(KappaDup, AllDistinctAddsOne) {
  const auto set = example_set();
  EXPECT_DOUBLE_EQ(kappa_dup(set, MeasureParams{}), 18.0);
}

TEST(KappaDup, RepeatedPair) {
  EXPECT_DOUBLE_EQ(kappa_dup(letters({"ab", "ab"}), MeasureParams{}), 7.0);
}

TEST(TopK, SingleRanking) {
  auto p = MeasureParams{};
  p.zeta = 10.0;
  p.beta = 0.5;
  EXPECT_NEAR(kappa1_topk(letters({"abc"}), p), 0.875, 1e-12);
}

TEST(TopK, CutOffIsStrict) {
  auto p = MeasureParams{};
  p.zeta = 3.0;
  p.beta = 0.5;
  // c sits at mu + d = 3, exactly the cut-off: contributes nothing.
  EXPECT_NEAR(kappa1_topk(letters({"abc"}), p), 0.75, 1e-12);
}

TEST(TopK, ApproachesUnweightedKappa1) {
  const auto set = example_set();
  auto p = MeasureParams{};
  p.zeta = 100.0;
  p.beta = 1.0 - 1e-12;
  EXPECT_NEAR(kappa1_topk(set, p), kappa_series(set, MeasureParams{}).kappa(1), 1e-9);
}

TEST(TopK, RequiresZetaAndBeta) {
  auto p = MeasureParams{};
  p.zeta = 3.0;
  EXPECT_THROW(kappa1_topk(letters({"abc"}), p), InvalidArgument);
}

TEST(Properties, ZeroPropagation) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto set = random_set(rng, 4, 8, true, true);
    const auto p = weighted(0.8, 0.8);
    const auto prof = kappa_series(set, p);
    for (double v : prof.series) EXPECT_GT(v, p.epsilon);
    for (std::size_t q = prof.ell + 1; q <= prof.ell + 3; ++q) EXPECT_EQ(prof.kappa(q), 0.0);
  }
}

TEST(Properties, SubsetMonotonicity) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::string> rs;
    const auto base = random_set(rng, 4, 7, true, false);
    for (const auto& r : base.rankings()) {
      std::string s;
      for (ItemId item : r.items()) s += base.items().token(item);
      rs.push_back(s);
    }
    for (std::size_t k = 1; k < rs.size(); ++k) {
      const std::vector<std::string> smaller(rs.begin(), rs.begin() + static_cast<long>(k));
      const std::vector<std::string> larger(rs.begin(), rs.begin() + static_cast<long>(k) + 1);
      EXPECT_LE(kappa_series(letters(larger), MeasureParams{}).exact_total,
                kappa_series(letters(smaller), MeasureParams{}).exact_total);
    }
  }
}

TEST(Properties, NonIncreasingInGammaAndLambda) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const auto set = random_set(rng, 3, 8, true, true);
    for (double fixed : {1.0, 0.7}) {
      KappaProfile prev_g = kappa_series(set, weighted(1.0, fixed));
      KappaProfile prev_l = kappa_series(set, weighted(fixed, 1.0));
      for (double x = 0.95; x > 0.4; x -= 0.05) {
        const auto g = kappa_series(set, weighted(x, fixed));
        const auto l = kappa_series(set, weighted(fixed, x));
        EXPECT_LE(g.total, prev_g.total + 1e-12);
        EXPECT_LE(l.total, prev_l.total + 1e-12);
        for (std::size_t p = 1; p <= prev_g.ell; ++p) {
          EXPECT_LE(g.kappa(p), prev_g.kappa(p) + 1e-12);
        }
        for (std::size_t p = 1; p <= prev_l.ell; ++p) {
          EXPECT_LE(l.kappa(p), prev_l.kappa(p) + 1e-12);
        }
        prev_g = g;
        prev_l = l;
      }
    }
  }
}

TEST(Properties, PermutationInvariance) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const auto set = random_set(rng, 4, 8, true, true);
    std::vector<TokenGroups> groups;
    for (const auto& r : set.rankings()) {
      auto& g = groups.emplace_back();
      for (const auto& tie : r.groups()) {
        auto& out = g.emplace_back();
        for (ItemId item : tie) out.push_back(set.items().token(item));
      }
    }
    std::shuffle(groups.begin(), groups.end(), rng);
    const auto shuffled = RankingSet::from_groups(groups);
    for (const auto& p : {MeasureParams{}, weighted(0.75, 0.6)}) {
      const auto a = kappa_series(set, p);
      const auto b = kappa_series(shuffled, p);
      EXPECT_EQ(a.ell, b.ell);
      EXPECT_NEAR(a.total, b.total, 1e-12 * std::max(1.0, a.total));
    }
  }
}

TEST(Properties, ReferenceInvariance) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto set = random_set(rng, 4, 8, true, true);
    const auto p = weighted(0.85, 0.55);
    const auto base = kappa_series(set, p);
    for (std::size_t ref = 0; ref < set.size(); ++ref) {
      const auto other = kappa_series(build_matrix(set, p, {ref, Storage::automatic}), p);
      EXPECT_EQ(other.ell, base.ell);
      EXPECT_NEAR(other.total, base.total, 1e-12);
    }
  }
}

}  // namespace
