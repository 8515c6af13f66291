#include "algmatch/matching.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <variant>

#include "algmatch/error.hpp"
#include "algmatch/oracle.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace algmatch {
namespace {

const PrimeModulus kMod = PrimeModulus::default_for(10);

// C4 with weights (1, 0, 1, 0) around the cycle 0-1-2-3-0.
WeightedGraph c4() { return WeightedGraph(4, {{0, 1, 1}, {1, 2, 0}, {2, 3, 1}, {0, 3, 0}}); }

WeightedGraph k4() {
  return WeightedGraph(4, {{0, 1, 0}, {0, 2, 1}, {0, 3, 0}, {1, 2, 0}, {1, 3, 1}, {2, 3, 0}});
}

bool same_edge_set(std::vector<Edge> a, std::vector<Edge> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

TEST(HasPerfectMatching, Examples) {
  SeededRng rng(1);
  EXPECT_TRUE(has_perfect_matching(WeightedGraph(2, {{0, 1, 0}}), rng, kMod));
  EXPECT_FALSE(has_perfect_matching(WeightedGraph(3, {{0, 1, 0}, {1, 2, 0}}), rng, kMod));
  EXPECT_TRUE(has_perfect_matching(WeightedGraph(0, {}), rng, kMod));
  EXPECT_FALSE(has_perfect_matching(WeightedGraph(4, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}}), rng, kMod));
}

TEST(HasPerfectMatching, AllLabelledSixVertexGraphs) {
  SeededRng rng(2);
  const PrimeModulus mod = PrimeModulus::default_for(6);
  int disagreements = 0;
  for (u64 mask = 0; mask < (u64{1} << 15); ++mask) {
    const WeightedGraph g = testing::graph_from_mask(6, mask);
    const bool truth = !oracle::enum_perfect_matchings(g).matchings.empty();
    const bool got = has_perfect_matching(g, rng, mod);
    if (got) { EXPECT_TRUE(truth) << "false positive, mask " << mask; }
    disagreements += got != truth ? 1 : 0;
  }
  EXPECT_EQ(disagreements, 0);
}

// Canonical form of a 6-vertex graph: smallest mask over all relabellings.
u64 canonical_mask(u64 mask) {
  std::array<std::size_t, 6> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  std::array<std::array<std::size_t, 6>, 6> bit{};
  std::size_t b = 0;
  for (std::size_t u = 0; u < 6; ++u) {
    for (std::size_t v = u + 1; v < 6; ++v, ++b) bit[u][v] = bit[v][u] = b;
  }
  u64 best = ~u64{0};
  do {
    u64 relabelled = 0;
    for (std::size_t u = 0; u < 6; ++u) {
      for (std::size_t v = u + 1; v < 6; ++v) {
        if ((mask >> bit[u][v]) & 1) relabelled |= u64{1} << bit[perm[u]][perm[v]];
      }
    }
    best = std::min(best, relabelled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TEST(HasPerfectMatching, IsomorphismClassesOnSixVertices) {
  std::set<u64> classes, with_matching;
  SeededRng rng(3);
  const PrimeModulus mod = PrimeModulus::default_for(6);
  for (u64 mask = 0; mask < (u64{1} << 15); ++mask) {
    const u64 canon = canonical_mask(mask);
    if (!classes.insert(canon).second) continue;
    const WeightedGraph g = testing::graph_from_mask(6, canon);
    const bool truth = !oracle::enum_perfect_matchings(g).matchings.empty();
    EXPECT_EQ(has_perfect_matching(g, rng, mod), truth);
    if (truth) with_matching.insert(canon);
  }
  EXPECT_EQ(classes.size(), 156u);
  EXPECT_EQ(with_matching.size(), 101u);
}

TEST(HasPerfectMatching, NeverFalsePositiveAndRareFalseNegative) {
  SeededRng rng(4);
  int false_negatives = 0, positives = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(2 * (1 + rng.uniform_below(4)), 0.3, rng);
    const bool truth = !oracle::enum_perfect_matchings(g).matchings.empty();
    const bool got = has_perfect_matching(g, rng, kMod);
    ASSERT_TRUE(!got || truth);
    if (truth) {
      ++positives;
      false_negatives += got ? 0 : 1;
    }
  }
  // <= 2 n / p per trial with n <= 8.
  EXPECT_LE(false_negatives, std::max(1.0, 2.0 * 8 / kMod.value() * positives));
}

TEST(FindPerfectMatching, Examples) {
  SeededRng rng(5);
  const WeightedGraph edge(2, {{0, 1, 1}});
  const auto single = find_perfect_matching(edge, rng, kMod);
  ASSERT_TRUE(std::holds_alternative<MatchingResult>(single));
  EXPECT_EQ(std::get<MatchingResult>(single).edges, std::vector<Edge>({{0, 1, 1}}));
  EXPECT_EQ(std::get<MatchingResult>(single).weight, 1);

  const auto truth = oracle::enum_perfect_matchings(c4());
  const auto cycle = find_perfect_matching(c4(), rng, kMod);
  ASSERT_TRUE(std::holds_alternative<MatchingResult>(cycle));
  const auto& found = std::get<MatchingResult>(cycle).edges;
  EXPECT_TRUE(is_perfect_matching(c4(), found));
  EXPECT_TRUE(std::any_of(truth.matchings.begin(), truth.matchings.end(),
                          [&](const std::vector<Edge>& m) { return same_edge_set(m, found); }));

  const auto complete = find_perfect_matching(k4(), rng, kMod);
  ASSERT_TRUE(std::holds_alternative<MatchingResult>(complete));
  EXPECT_TRUE(is_perfect_matching(k4(), std::get<MatchingResult>(complete).edges));

  const auto none = find_perfect_matching(WeightedGraph(4, {{0, 1, 0}, {0, 2, 0}}), rng, kMod);
  ASSERT_TRUE(std::holds_alternative<Infeasible>(none));
  EXPECT_FALSE(std::get<Infeasible>(none).probable);
}

TEST(FindPerfectMatching, RandomGraphs) {
  SeededRng rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(2 * (1 + rng.uniform_below(5)), 0.35, rng);
    const bool truth = !oracle::enum_perfect_matchings(g).matchings.empty();
    const auto out = find_perfect_matching(g, rng, kMod);
    if (const auto* m = std::get_if<MatchingResult>(&out)) {
      EXPECT_TRUE(is_perfect_matching(g, m->edges));
    } else {
      EXPECT_FALSE(truth);
    }
  }
}

TEST(DetPencil, SingleEdges) {
  SeededRng rng(7);
  const SubstitutedTutte light = substitute(WeightedGraph(2, {{0, 1, 0}}), rng, kMod);
  const u64 r0 = light.assignment().at({0, 1, 0});
  const FieldMatrix m0 = light.combined();
  ASSERT_EQ(oracle::brute_determinant(m0).value(), kMod.mul(r0, r0));
  EXPECT_EQ(det_pencil(light), Polynomial::constant(kMod.mul(r0, r0), kMod));

  const SubstitutedTutte heavy = substitute(WeightedGraph(2, {{0, 1, 1}}), rng, kMod);
  const u64 r1 = heavy.assignment().at({0, 1, 1});
  EXPECT_EQ(det_pencil(heavy), Polynomial::monomial(2, kMod).scaled(kMod.mul(r1, r1)));

  const Polynomial pf = pf_pencil(heavy);
  EXPECT_TRUE(pf == Polynomial::monomial(1, kMod).scaled(r1) || pf == -Polynomial::monomial(1, kMod).scaled(r1));
}

TEST(DetPencil, SingularPrecondition) {
  SeededRng rng(8);
  const SubstitutedTutte st = substitute(WeightedGraph(4, {{0, 1, 0}}), rng, kMod);
  EXPECT_THROW(det_pencil(st), UsageError);
  EXPECT_TRUE(pencil_determinant(pencil_of(st)).is_zero());
}

TEST(DetPencil, MatchesInterpolationOracle) {
  SeededRng rng(9);
  int tested = 0;
  while (tested < 150) {
    const WeightedGraph g = testing::random_weighted_graph(2 * (1 + rng.uniform_below(4)), 0.5, rng);
    const SubstitutedTutte st = substitute(g, rng, kMod);
    if (determinant(st.combined()).is_zero()) continue;
    ++tested;
    const Polynomial d = det_pencil(st);
    EXPECT_EQ(d, oracle::interpolated_pencil_det(pencil_of(st)));
    EXPECT_LE(d.degree().value_or(0), g.vertex_count());
    for (int i = 0; i < 20; ++i) {
      const u64 a = rng.uniform_below(kMod.value());
      EXPECT_EQ(d.eval_raw(a), determinant(pencil_of(st).at(a)).value());
    }
  }
}

TEST(DetPencil, AnyNonsingularShiftGivesSamePolynomial) {
  SeededRng rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(6, 0.5, rng);
    const SkewPencil pencil = pencil_of(substitute(g, rng, kMod));
    const Polynomial reference = oracle::interpolated_pencil_det(pencil);
    for (u64 shift : {1u, 2u, 17u, 123456u}) {
      if (auto d = det_pencil_at(pencil, shift)) { EXPECT_EQ(*d, reference); }
    }
    EXPECT_EQ(pencil_determinant(pencil), reference);
  }
}

TEST(DetPencil, PencilDeterminantFallsBackWhenSingularAtOne) {
  // A parallel pair with r1 = -r0 makes t0 + t1 = 0, so y = 1 is a root of D.
  const WeightedGraph g(2, {{0, 1, 0}, {0, 1, 1}});
  const std::vector<u64> values{5, kMod.neg(5)};
  const SubstitutedTutte st = substitute_values(g, values, kMod);
  ASSERT_FALSE(det_pencil_at(pencil_of(st), 1));
  // pf = 5 - 5 y, D = 25 (1 - y)^2.
  const Polynomial expected = Polynomial({5, kMod.neg(5)}, kMod) * Polynomial({5, kMod.neg(5)}, kMod);
  EXPECT_EQ(pencil_determinant(pencil_of(st)), expected);
  const Polynomial pf = pencil_pfaffian(pencil_of(st));
  EXPECT_TRUE(pf == Polynomial({5, kMod.neg(5)}, kMod) || pf == -Polynomial({5, kMod.neg(5)}, kMod));
}

TEST(PfPencil, C4HasTwoCoefficients) {
  SeededRng rng(11);
  const SubstitutedTutte st = substitute(c4(), rng, kMod);
  const Polynomial pf = pf_pencil(st);
  const Polynomial truth = oracle::interpolated_pencil_pfaffian(pencil_of(st));
  EXPECT_TRUE(pf == truth || pf == -truth);
  EXPECT_NE(pf.coeff(0), 0u);
  EXPECT_EQ(pf.coeff(1), 0u);
  EXPECT_NE(pf.coeff(2), 0u);
  // Brute force: {01, 23} (weights 1, 1) and {03, 12} (weights 0, 0), both sign +.
  const auto r = [&](const Edge& e) { return st.assignment().at(e); };
  EXPECT_EQ(truth.coeff(2), kMod.mul(r({0, 1, 1}), r({2, 3, 1})));
  EXPECT_EQ(truth.coeff(0), kMod.mul(r({0, 3, 0}), r({1, 2, 0})));
  EXPECT_EQ(pf * pf, det_pencil(st));
}

TEST(PfPencil, SquareIsDeterminantAndDegreeBound) {
  SeededRng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(2 * (1 + rng.uniform_below(5)), 0.5, rng);
    const SubstitutedTutte st = substitute(g, rng, kMod);
    if (determinant(st.combined()).is_zero()) continue;
    const Polynomial pf = pf_pencil(st);
    EXPECT_EQ(pf * pf, det_pencil(st));
    EXPECT_LE(pf.degree().value_or(0), g.vertex_count() / 2);
  }
}

TEST(WeightProfile, Examples) {
  SeededRng rng(13);
  const WeightProfile single = weight_profile(WeightedGraph(2, {{0, 1, 1}}), rng, kMod);
  EXPECT_EQ(single.feasible, std::vector<bool>({false, true}));
  EXPECT_EQ(single.trials, 1);

  const WeightProfile cycle = weight_profile(c4(), rng, kMod);
  EXPECT_EQ(cycle.feasible, std::vector<bool>({true, false, true}));
  EXPECT_EQ(cycle.to_string(), "k=0:1 k=1:0 k=2:1");

  const WeightProfile none = weight_profile(WeightedGraph(4, {{0, 1, 0}}), rng, kMod, 2);
  EXPECT_FALSE(none.any());
  EXPECT_EQ(none.trials, 3);

  const WeightProfile odd = weight_profile(WeightedGraph(3, {{0, 1, 0}}), rng, kMod);
  EXPECT_FALSE(odd.any());
  EXPECT_EQ(odd.trials, 0);
}

TEST(WeightProfile, MatchesEnumeration) {
  SeededRng rng(14);
  int mismatches = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(2 * (1 + rng.uniform_below(4)), 0.4, rng);
    const auto truth = oracle::feasible_weights(g);
    const WeightProfile profile = weight_profile(g, rng, kMod);
    for (std::size_t k = 0; k < truth.size(); ++k) {
      if (profile.feasible[k]) { EXPECT_TRUE(truth[k]) << "unsound k=" << k; }
    }
    // [y^0] is nonzero iff a weight-0 matching exists.
    if (!profile.pf_poly.is_zero()) { EXPECT_EQ(profile.pf_poly.coeff(0) != 0, static_cast<bool>(truth[0])); }
    mismatches += profile.feasible == truth ? 0 : 1;
  }
  EXPECT_LE(mismatches, 3);
}

TEST(FindExactMatching, Examples) {
  SeededRng rng(15);
  const auto single = find_exact_matching(WeightedGraph(2, {{0, 1, 1}}), 1, rng, kMod);
  ASSERT_TRUE(std::holds_alternative<MatchingResult>(single));
  EXPECT_EQ(std::get<MatchingResult>(single).edges, std::vector<Edge>({{0, 1, 1}}));

  const auto light = find_exact_matching(c4(), 0, rng, kMod);
  ASSERT_TRUE(std::holds_alternative<MatchingResult>(light));
  EXPECT_TRUE(same_edge_set(std::get<MatchingResult>(light).edges, {{1, 2, 0}, {0, 3, 0}}));

  const auto heavy = find_exact_matching(c4(), 2, rng, kMod);
  ASSERT_TRUE(std::holds_alternative<MatchingResult>(heavy));
  EXPECT_TRUE(same_edge_set(std::get<MatchingResult>(heavy).edges, {{0, 1, 1}, {2, 3, 1}}));

  const auto missing = find_exact_matching(c4(), 1, rng, kMod);
  ASSERT_TRUE(std::holds_alternative<Infeasible>(missing));
  EXPECT_FALSE(std::get<Infeasible>(missing).probable);

  EXPECT_THROW(find_exact_matching(c4(), 3, rng, kMod), UsageError);
}

TEST(FindExactMatching, RandomGraphsEveryFeasibleWeight) {
  SeededRng rng(16);
  for (int trial = 0; trial < 150; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(2 * (1 + rng.uniform_below(4)), 0.45, rng);
    const auto truth = oracle::feasible_weights(g);
    for (std::size_t k = 0; k < truth.size(); ++k) {
      const auto out = find_exact_matching(g, k, rng, kMod);
      if (const auto* m = std::get_if<MatchingResult>(&out)) {
        EXPECT_TRUE(is_perfect_matching(g, m->edges));
        EXPECT_EQ(m->weight, static_cast<int>(k));
      } else {
        EXPECT_FALSE(truth[k]) << "missed feasible k=" << k;
      }
    }
  }
}

TEST(ReduceExact, CoefficientConservedAtEveryStep) {
  SeededRng rng(17);
  int traced = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(8, 0.4, rng);
    const auto truth = oracle::feasible_weights(g);
    const SubstitutedTutte st = substitute(g, rng, kMod);
    for (std::size_t k = 0; k < truth.size(); ++k) {
      if (!truth[k]) continue;
      ExactTrace trace;
      const auto m = reduce_exact(st, k, &trace);
      if (!m) continue;
      ++traced;
      EXPECT_EQ(trace.size(), g.vertex_count());
      for (u64 c : trace) { EXPECT_NE(c, 0u); }
      EXPECT_EQ(m->weight, static_cast<int>(k));
    }
  }
  EXPECT_GT(traced, 50);
}

}  // namespace
}  // namespace algmatch
