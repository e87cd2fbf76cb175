#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsub/graph.hpp"
#include "rsub/hypergraph.hpp"

namespace rsub {

struct ChernoffBounds {
  double lower_tail = 1;              // P(X <= mu/2) <= e^{-mu/8}
  std::optional<double> upper_tail;   // P(X >= t) <= e^{-t/6}; empty unless t > 2 mu
};

// Both values clamped to [0, 1]. InputError for mu < 0.
ChernoffBounds chernoff_bounds(double mu, double t);

struct ChernoffCheck {
  std::size_t n = 0;
  double prob = 0;
  double mu = 0;
  std::size_t trials = 0;
  std::size_t hits = 0;        // trials with X <= mu/2
  double empirical = 0;
  double bound = 0;
  double slack = 0;
  bool ok = false;             // empirical <= bound + slack
};

// Sums of n Bernoulli(prob) indicators; one stream per trial.
ChernoffCheck check_chernoff_lower_tail(std::size_t n, double prob, std::size_t trials, std::uint64_t seed,
                                        std::size_t threads = 0);

struct InequalityCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;     // grid points outside the hypotheses
  std::size_t failures = 0;
  std::optional<std::pair<double, double>> first_failure;  // (a, b)
  bool ok() const { return failures == 0 && checked > 0; }
};

struct InequalityGrid {
  std::size_t points = 100;    // per axis, log-spaced
  double a_min = 1e-6;
  double a_max = 0.999;
  double b_min = 1e-6;
  double b_max = 1e6;
};

// The five elementary estimates used by the sampling lemmas, evaluated in log
// or expm1 form for accuracy:
//   (1-a)^b <= e^{-ab}, e^{-ab} <= 1 - ab/2   for ab < 1, a < 1
//   1 - 2ab < (1-a)^b                          for ab < 1, a <= 1/2
//   (1+a)^{1/(1+a)} > 1 + a/2, (1+a/2)^{1/(1+a)} >= 1 + a/4   for 0 < a < 1/2
// The one-variable estimates use the a-axis only.
std::vector<InequalityCheck> numeric_inequality_suite(const InequalityGrid& grid = {});

// Sampling 2e^{-lambda} bound plus 3 sigma normal slack and 1e-3.
double bound_slack(double bound, std::size_t trials);

struct TrialReport {
  std::string lemma;
  std::string instance;
  std::size_t trials = 0;
  std::size_t successes = 0;   // trials in which the good event held
  double failure_rate = 0;
  double bound = 0;            // theoretical failure bound, clamped to [0, 1]
  double slack = 0;
  bool within_bound = false;   // failure_rate <= bound + slack
  bool hypotheses_ok = false;
  std::string hypothesis_note; // first failing hypothesis, if any
  double lambda = 0;
  double p = 0;
  double p_c = 0;
  double mu = 0;               // exact expectation where the lemma defines one
  double threshold = 0;        // size the good event must beat
  std::uint64_t seed = 0;
  double wall_seconds = 0;     // not part of serialized artifacts

  // Bound comparisons are asserted only under the hypotheses and with at least
  // kMinAssertTrials trials.
  static constexpr std::size_t kMinAssertTrials = 1000;
  bool asserted() const { return hypotheses_ok && trials >= kMinAssertTrials; }
};

// Bipartite graph with sides A = 0..a-1 and B = 0..b-1 (separate id spaces).
struct BipartiteInstance {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<Edge> edges;     // (A id, B id)
  std::vector<Color> colors;   // empty, or a proper coloring parallel to edges
  std::string name;

  std::size_t max_a_degree() const;
  // Throws InputError on out-of-range ids, duplicates, or an improper coloring.
  void validate() const;
};

BipartiteInstance complete_bipartite_instance(std::size_t a, std::size_t b);
// Each A vertex joins `degree` distinct uniformly random B vertices.
BipartiteInstance random_bipartite_instance(std::size_t a, std::size_t b, std::size_t degree, std::uint64_t seed);
// Disjoint stars: B vertex j is the center of a star with `leaves` A leaves.
BipartiteInstance star_instance(std::size_t centers, std::size_t leaves);
// A vertex u owns B vertices u*leaves .. u*leaves+leaves-1; edge j of u gets
// color j, which is proper.
BipartiteInstance private_star_instance(std::size_t a, std::size_t leaves);
// Proper coloring: the edge (u, v) gets color (u + v) mod b, after checking
// no two edges at a vertex clash; falls back to greedy first-fit.
BipartiteInstance properly_colored(BipartiteInstance inst);

struct SamplingOptions {
  double p = 0.5;
  double p_c = 1.0;
  double lambda = 2.0;
  std::size_t trials = 10'000;
  std::uint64_t seed = 1;
  std::size_t threads = 0;     // 0: hardware concurrency
};

// U samples A with probability p. Good event: |N(U)| > mu / (64 lambda
// log2(lambda/p)). Hypothesis: K <= mu / (32 lambda log2(lambda/p)).
// InputError unless 0 < p <= 1 and lambda > 1.
TrialReport estimate_neighborhood_sampling(const BipartiteInstance& inst, const SamplingOptions& opt);

// Also samples colors with probability p_c. Good event: |N_Q(U)| > mu / (64
// lambda log2(lambda/(p p_c))). Hypothesis: K + |A| <= mu / (128 lambda
// log2(lambda/(p p_c))). InputError for a missing or improper coloring.
TrialReport estimate_colored_sampling(const BipartiteInstance& inst, const SamplingOptions& opt);

struct MasterOptions {
  SamplingOptions sampling;
  double alpha = 0.25;
  VertexSet b;                 // the set being sampled
  ForbiddenMap phi;            // empty map: nothing forbidden
};

// Good event: |N_{Q,phi}(U) \ B| >= |B|/4 min{d p p_c alpha / (64 lambda^5),
// (n / 2|B|)^{alpha/(1+alpha)} - 1}. Every hypothesis of the expansion lemma
// is evaluated; alpha-maximality exactly when n <= 24, else by sampling.
TrialReport estimate_master(const ColoredGraph& g, const MasterOptions& opt);

struct ReachOptions {
  SamplingOptions sampling;
  double tau = 0.25;
  std::size_t ell = 8;         // path-length budget
};

// Random source per trial; U and Q sprinkled over ell - 1 and ell rounds.
// Good event: at least n^{1-tau} vertices (source included) reached by
// rainbow (U,Q)-paths of length <= ell. Bound 2e^{-lambda}, reported only.
TrialReport estimate_reach(const ColoredGraph& g, const ReachOptions& opt);

// r-graph form: random start face, U sampled with p, faces reached by proper
// U-paths of length <= ell (ell >= r - 1), summed over all levels. Good event:
// at least p(G)^{1-tau} faces.
TrialReport estimate_reach(const RGraph& g, const ReachOptions& opt);

// CSV with a fixed, versioned header; one row per report.
std::string reports_csv(const std::vector<TrialReport>& reports);
// {"format": "rsub-mc-report", "version": 1, "reports": [...]}
std::string reports_json(const std::vector<TrialReport>& reports);
std::string chernoff_csv(const std::vector<ChernoffCheck>& checks);
std::string inequalities_csv(const std::vector<InequalityCheck>& checks);

}  // namespace rsub
