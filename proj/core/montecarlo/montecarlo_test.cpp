#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "rsub/errors.hpp"
#include "rsub/generators.hpp"
#include "rsub/montecarlo.hpp"

namespace rsub {
namespace {

SamplingOptions sampling(double p, double p_c, double lambda, std::size_t trials, std::uint64_t seed = 1) {
  SamplingOptions s;
  s.p = p;
  s.p_c = p_c;
  s.lambda = lambda;
  s.trials = trials;
  s.seed = seed;
  return s;
}

TEST(Chernoff, Formulas) {
  auto b8 = chernoff_bounds(8, 0);
  EXPECT_NEAR(b8.lower_tail, std::exp(-1.0), 1e-12);
  EXPECT_NEAR(b8.lower_tail, 0.3679, 1e-4);
  EXPECT_FALSE(b8.upper_tail);
  EXPECT_EQ(chernoff_bounds(0, 0).lower_tail, 1.0);
  EXPECT_FALSE(chernoff_bounds(8, 16).upper_tail);
  auto up = chernoff_bounds(8, 18);
  ASSERT_TRUE(up.upper_tail);
  EXPECT_NEAR(*up.upper_tail, std::exp(-3.0), 1e-12);
  EXPECT_THROW(chernoff_bounds(-1, 0), InputError);
}

TEST(Chernoff, HundredFairCoins) {
  auto c = check_chernoff_lower_tail(100, 0.5, 100'000, 7);
  EXPECT_EQ(c.mu, 50);
  EXPECT_NEAR(c.bound, std::exp(-50.0 / 8), 1e-12);
  EXPECT_LE(c.empirical, c.bound);
  EXPECT_TRUE(c.ok);
}

TEST(Chernoff, LowerTailForSeveralMeans) {
  for (double mu : {4.0, 8.0, 16.0}) {
    auto c = check_chernoff_lower_tail(static_cast<std::size_t>(2 * mu), 0.5, 100'000, 3);
    EXPECT_DOUBLE_EQ(c.mu, mu);
    EXPECT_TRUE(c.ok) << mu << " " << c.empirical << " " << c.bound;
  }
}

TEST(Inequalities, DirectEvaluation) {
  const double a = 0.1, b = 5;
  EXPECT_NEAR(std::pow(1 - a, b), 0.5905, 1e-4);
  EXPECT_NEAR(std::exp(-a * b), 0.6065, 1e-4);
  EXPECT_LE(std::pow(1 - a, b), std::exp(-a * b));
  EXPECT_LE(std::exp(-a * b), 1 - a * b / 2);
  EXPECT_GT(std::pow(1.4, 1 / 1.4), 1.2);
}

TEST(Inequalities, GridPasses) {
  auto checks = numeric_inequality_suite();
  ASSERT_EQ(checks.size(), 5u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.ok()) << c.name;
    EXPECT_GT(c.skipped, 0u) << c.name;
    EXPECT_EQ(c.checked + c.skipped, c.name.find("(1+a") == 0 ? 100u : 10'000u) << c.name;
  }
  InequalityGrid tiny;
  tiny.points = 2;
  tiny.a_min = 1e-6;
  tiny.a_max = 2e-6;
  tiny.b_min = 1e-6;
  tiny.b_max = 1;
  for (const auto& c : numeric_inequality_suite(tiny)) EXPECT_TRUE(c.ok()) << c.name;
  tiny.points = 1;
  EXPECT_THROW(numeric_inequality_suite(tiny), InputError);
}

TEST(Instances, BuildersValidate) {
  EXPECT_NO_THROW(complete_bipartite_instance(3, 4).validate());
  auto r = random_bipartite_instance(50, 80, 3, 2);
  EXPECT_EQ(r.edges.size(), 150u);
  EXPECT_EQ(r.max_a_degree(), 3u);
  EXPECT_NO_THROW(properly_colored(r).validate());
  EXPECT_NO_THROW(properly_colored(complete_bipartite_instance(5, 7)).validate());
  EXPECT_NO_THROW(private_star_instance(4, 3).validate());
  auto bad = complete_bipartite_instance(2, 2);
  bad.colors = {0, 0, 1, 1};
  EXPECT_THROW(bad.validate(), InputError);
  EXPECT_THROW(random_bipartite_instance(2, 2, 3, 1), InputError);
}

TEST(NeighborhoodSampling, CompleteBipartiteNeverFails) {
  auto r = estimate_neighborhood_sampling(complete_bipartite_instance(40, 40), sampling(0.5, 1, 3, 2000));
  EXPECT_EQ(r.failure_rate, 0.0);
  EXPECT_NEAR(r.mu, 40.0, 1e-9);
  EXPECT_TRUE(r.within_bound);
}

TEST(NeighborhoodSampling, FullSampleIsDeterministic) {
  auto inst = random_bipartite_instance(30, 100, 4, 5);
  auto r = estimate_neighborhood_sampling(inst, sampling(1, 1, 2, 1000));
  EXPECT_EQ(r.failure_rate, 0.0);
  std::set<Vertex> nb;
  for (auto [u, v] : inst.edges) nb.insert(v);
  EXPECT_DOUBLE_EQ(r.mu, static_cast<double>(nb.size()));
}

TEST(NeighborhoodSampling, StarHeavyInstanceIsFlagged) {
  auto r = estimate_neighborhood_sampling(star_instance(3, 50), sampling(0.5, 1, 2, 1000));
  EXPECT_FALSE(r.hypotheses_ok);
  EXPECT_FALSE(r.asserted());
  EXPECT_FALSE(r.hypothesis_note.empty());
  EXPECT_LE(r.successes, r.trials);
}

TEST(NeighborhoodSampling, InstancesMeetingHypothesisStayWithinBound) {
  std::vector<BipartiteInstance> instances = {private_star_instance(500, 2),
                                              random_bipartite_instance(400, 2000, 2, 1)};
  for (double lambda : {2.0, 3.0})
    for (const auto& inst : instances) {
      auto r = estimate_neighborhood_sampling(inst, sampling(0.5, 1, lambda, 10'000));
      if (lambda == 2.0) EXPECT_TRUE(r.hypotheses_ok) << inst.name << " " << r.hypothesis_note;
      if (!r.hypotheses_ok) continue;
      EXPECT_TRUE(r.asserted());
      EXPECT_TRUE(r.within_bound) << inst.name << " " << r.failure_rate;
      EXPECT_NEAR(r.bound, 2 * std::exp(-lambda), 1e-12);
    }
}

TEST(NeighborhoodSampling, RejectsBadParameters) {
  auto inst = complete_bipartite_instance(2, 2);
  EXPECT_THROW(estimate_neighborhood_sampling(inst, sampling(0, 1, 2, 10)), InputError);
  EXPECT_THROW(estimate_neighborhood_sampling(inst, sampling(0.5, 1, 1, 10)), InputError);
  EXPECT_THROW(estimate_neighborhood_sampling(inst, sampling(0.5, 1, 2, 0)), InputError);
}

TEST(ColoredSampling, FullColorSampleReducesToUncolored) {
  auto inst = properly_colored(complete_bipartite_instance(3, 1));
  auto plain = estimate_neighborhood_sampling(inst, sampling(0.5, 1, 2, 10'000, 4));
  auto colored = estimate_colored_sampling(inst, sampling(0.5, 1, 2, 10'000, 9));
  EXPECT_DOUBLE_EQ(plain.mu, colored.mu);
  EXPECT_DOUBLE_EQ(plain.threshold, colored.threshold);
  EXPECT_NEAR(plain.failure_rate, 0.125, 0.015);
  const double sigma = std::sqrt(2 * 0.125 * 0.875 / 10'000);
  EXPECT_NEAR(plain.failure_rate, colored.failure_rate, 4 * sigma);
}

TEST(ColoredSampling, RainbowStructuredInstanceMeetsBound) {
  // K + |A| <= mu / (128 * 3 * log2 3) first holds for 1218 private stars of 1218 leaves.
  auto inst = private_star_instance(1220, 1220);
  auto r = estimate_colored_sampling(inst, sampling(1, 1, 3, 1000));
  EXPECT_TRUE(r.hypotheses_ok) << r.hypothesis_note;
  EXPECT_TRUE(r.asserted());
  EXPECT_TRUE(r.within_bound);
  EXPECT_EQ(r.failure_rate, 0.0);
  auto small = estimate_colored_sampling(private_star_instance(1200, 1200), sampling(1, 1, 3, 10));
  EXPECT_FALSE(small.hypotheses_ok);
}

TEST(ColoredSampling, TinySamplingProbabilityIsFlagged) {
  auto inst = properly_colored(random_bipartite_instance(50, 50, 5, 3));
  auto r = estimate_colored_sampling(inst, sampling(0.01, 0.01, 2, 1000));
  EXPECT_FALSE(r.hypotheses_ok);
  EXPECT_LT(r.mu, 1.0);
  EXPECT_THROW(estimate_colored_sampling(complete_bipartite_instance(2, 2), sampling(0.5, 0.5, 2, 10)), InputError);
}

TEST(Master, DenseMaximalGraphExpandsDeterministically) {
  auto g = greedy_proper_coloring(complete_graph(12));
  MasterOptions opt;
  opt.sampling = sampling(1, 1, 2, 1000);
  opt.alpha = 0.25;
  opt.b = {0, 1, 2};
  auto r = estimate_master(g, opt);
  EXPECT_EQ(r.failure_rate, 0.0);
  EXPECT_FALSE(r.hypotheses_ok);
  EXPECT_EQ(r.hypothesis_note, "lambda <= 1e10 log(2/(p p_c))");
  EXPECT_GT(r.threshold, 0.0);
}

TEST(Master, FailureRateNonIncreasingInLambda) {
  auto g = greedy_proper_coloring(complete_graph(12));
  double previous = 1.1;
  for (double lambda : {1.0, 2.0, 3.0}) {
    MasterOptions opt;
    opt.sampling = sampling(0.3, 0.3, lambda, 5000, 17);
    opt.b = {0, 1, 2, 3, 4};
    auto r = estimate_master(g, opt);
    EXPECT_LE(r.failure_rate, previous) << lambda;
    previous = r.failure_rate;
  }
  MasterOptions empty;
  EXPECT_THROW(estimate_master(g, empty), InputError);
}

TEST(Reach, FullSamplesReachEverything) {
  auto g = greedy_proper_coloring(complete_graph(8));
  ReachOptions opt;
  opt.sampling = sampling(1, 1, 2, 500);
  opt.ell = 3;
  auto r = estimate_reach(g, opt);
  EXPECT_EQ(r.successes, r.trials);
  EXPECT_FALSE(r.hypotheses_ok);
}

TEST(Reach, EmptySamplesReachOnlyTheSource) {
  auto g = greedy_proper_coloring(complete_graph(8));
  ReachOptions opt;
  opt.sampling = sampling(0, 0, 2, 500);
  EXPECT_EQ(estimate_reach(g, opt).successes, 0u);
  ColoredGraph single(1, {}, {});
  EXPECT_EQ(estimate_reach(single, opt).successes, opt.sampling.trials);
}

TEST(Reach, SuccessNonDecreasingInP) {
  auto g = ColoredGraph::rainbow(cycle_graph(30));
  double previous = -1;
  for (double p : {0.2, 0.5, 0.8, 1.0}) {
    ReachOptions opt;
    opt.sampling = sampling(p, 1, 2, 4000, 5);
    auto r = estimate_reach(g, opt);
    double rate = static_cast<double>(r.successes) / static_cast<double>(r.trials);
    EXPECT_GE(rate, previous - 3 * std::sqrt(0.25 / 4000.0)) << p;
    previous = rate;
  }
  EXPECT_EQ(previous, 1.0);
}

TEST(Reach, FaceForm) {
  // Level 0 from a face of K_9^(3) holds the C(7, 2) = 21 faces avoiding it,
  // above 36^(3/4).
  auto g = complete_rgraph(9, 3);
  ReachOptions opt;
  opt.sampling = sampling(1, 1, 2, 300);
  opt.ell = 4;
  auto r = estimate_reach(g, opt);
  EXPECT_EQ(r.successes, r.trials);
  EXPECT_EQ(r.lemma, "reach-faces");
  opt.ell = 1;
  EXPECT_THROW(estimate_reach(g, opt), InputError);
}

TEST(Reports, ReproducibleAcrossThreadCounts) {
  auto inst = random_bipartite_instance(60, 90, 3, 8);
  auto one = sampling(0.2, 1, 2, 3000, 42);
  one.threads = 1;
  auto four = one;
  four.threads = 4;
  auto a = estimate_neighborhood_sampling(inst, one);
  auto b = estimate_neighborhood_sampling(inst, four);
  EXPECT_EQ(reports_csv({a}), reports_csv({b}));
  EXPECT_EQ(reports_json({a}), reports_json({b}));
  auto c1 = check_chernoff_lower_tail(20, 0.3, 5000, 1, 1);
  auto c4 = check_chernoff_lower_tail(20, 0.3, 5000, 1, 4);
  EXPECT_EQ(chernoff_csv({c1}), chernoff_csv({c4}));
}

TEST(Reports, Formats) {
  auto r = estimate_neighborhood_sampling(complete_bipartite_instance(4, 4), sampling(0.5, 1, 2, 100));
  auto j = nlohmann::json::parse(reports_json({r, r}));
  EXPECT_EQ(j["format"], "rsub-mc-report");
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(j["reports"].size(), 2u);
  EXPECT_FALSE(j["reports"][0].contains("wall_seconds"));
  auto csv = reports_csv({r});
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
  EXPECT_EQ(csv.rfind("version,lemma,", 0), 0u);
  auto ineq = inequalities_csv(numeric_inequality_suite());
  EXPECT_EQ(std::count(ineq.begin(), ineq.end(), '\n'), 6);
}

}  // namespace
}  // namespace rsub
