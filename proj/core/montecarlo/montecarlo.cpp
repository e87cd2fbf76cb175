#include "rsub/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rsub/density.hpp"
#include "rsub/errors.hpp"
#include "rsub/rainbow.hpp"
#include "rsub/topo.hpp"

namespace rsub {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// 1 - (1 - q)^d without cancellation.
double hit_probability(std::size_t d, double q) {
  if (d == 0) return 0.0;
  if (q >= 1) return 1.0;
  return -std::expm1(static_cast<double>(d) * std::log1p(-q));
}

// Counts trials whose predicate holds. Trial t draws from Rng::stream(seed,
// t); per-thread counts are summed, so the result ignores the thread count.
template <class F>
std::size_t count_trials(std::size_t trials, std::uint64_t seed, std::size_t threads, const F& good) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::max<std::size_t>(1, std::min(threads, trials));
  std::vector<std::size_t> counts(threads, 0);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t t = w; t < trials; t += threads) {
        Rng rng = Rng::stream(seed, t);
        if (good(rng)) ++counts[w];
      }
    });
  for (auto& th : pool) th.join();
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  return total;
}

void finish(TrialReport& r) {
  r.failure_rate = r.trials ? 1.0 - static_cast<double>(r.successes) / static_cast<double>(r.trials) : 0.0;
  r.bound = clamp01(r.bound);
  r.slack = bound_slack(r.bound, r.trials);
  r.within_bound = r.failure_rate <= r.bound + r.slack;
}

void check_sampling(const SamplingOptions& o, bool colors) {
  if (!(o.p > 0 && o.p <= 1)) throw InputError("p must lie in (0, 1]");
  if (colors && !(o.p_c > 0 && o.p_c <= 1)) throw InputError("p_c must lie in (0, 1]");
  if (!(o.lambda > 1)) throw InputError("lambda must exceed 1");
  if (o.trials == 0) throw InputError("trials must be positive");
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

ChernoffBounds chernoff_bounds(double mu, double t) {
  if (!(mu >= 0)) throw InputError("mu must be nonnegative");
  ChernoffBounds out;
  out.lower_tail = clamp01(std::exp(-mu / 8));
  if (t > 2 * mu) out.upper_tail = clamp01(std::exp(-t / 6));
  return out;
}

double bound_slack(double bound, std::size_t trials) {
  if (trials == 0) return 1.0;
  return 3 * std::sqrt(bound * (1 - bound) / static_cast<double>(trials)) + 1e-3;
}

ChernoffCheck check_chernoff_lower_tail(std::size_t n, double prob, std::size_t trials, std::uint64_t seed,
                                        std::size_t threads) {
  if (!(prob >= 0 && prob <= 1)) throw InputError("probability must lie in [0, 1]");
  if (trials == 0) throw InputError("trials must be positive");
  ChernoffCheck c;
  c.n = n;
  c.prob = prob;
  c.mu = static_cast<double>(n) * prob;
  c.trials = trials;
  c.hits = count_trials(trials, seed, threads, [&](Rng& rng) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < n; ++i) x += rng.bernoulli(prob);
    return static_cast<double>(x) <= c.mu / 2;
  });
  c.empirical = static_cast<double>(c.hits) / static_cast<double>(trials);
  c.bound = chernoff_bounds(c.mu, 0).lower_tail;
  c.slack = bound_slack(c.bound, trials);
  c.ok = c.empirical <= c.bound + c.slack;
  return c;
}

std::vector<InequalityCheck> numeric_inequality_suite(const InequalityGrid& grid) {
  if (grid.points < 2 || !(grid.a_min > 0) || !(grid.a_max > grid.a_min) || !(grid.b_min > 0) ||
      !(grid.b_max > grid.b_min))
    throw InputError("invalid inequality grid");
  auto axis = [&](double lo, double hi) {
    std::vector<double> v(grid.points);
    for (std::size_t i = 0; i < grid.points; ++i)
      v[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * static_cast<double>(i) /
                                         static_cast<double>(grid.points - 1));
    return v;
  };
  const auto as = axis(grid.a_min, grid.a_max);
  const auto bs = axis(grid.b_min, grid.b_max);
  std::vector<InequalityCheck> out(5);
  out[0].name = "(1-a)^b <= e^(-ab)";
  out[1].name = "e^(-ab) <= 1-ab/2";
  out[2].name = "1-2ab < (1-a)^b";
  out[3].name = "(1+a)^(1/(1+a)) > 1+a/2";
  out[4].name = "(1+a/2)^(1/(1+a)) >= 1+a/4";
  auto record = [](InequalityCheck& c, bool holds, double a, double b) {
    ++c.checked;
    if (!holds) {
      ++c.failures;
      if (!c.first_failure) c.first_failure = {a, b};
    }
  };
  for (double a : as)
    for (double b : bs) {
      const double ab = a * b;
      if (ab >= 1 || a >= 1) {
        ++out[0].skipped;
        ++out[1].skipped;
        ++out[2].skipped;
        continue;
      }
      const double log_pow = b * std::log1p(-a);  // log (1-a)^b
      record(out[0], log_pow <= -ab, a, b);
      record(out[1], std::expm1(-ab) <= -ab / 2, a, b);
      if (a <= 0.5)
        record(out[2], -2 * ab < std::expm1(log_pow), a, b);
      else
        ++out[2].skipped;
    }
  for (double a : as) {
    if (a >= 0.5) {
      ++out[3].skipped;
      ++out[4].skipped;
      continue;
    }
    record(out[3], std::log1p(a) / (1 + a) > std::log1p(a / 2), a, 0);
    record(out[4], std::log1p(a / 2) / (1 + a) >= std::log1p(a / 4), a, 0);
  }
  return out;
}

std::size_t BipartiteInstance::max_a_degree() const {
  std::vector<std::size_t> deg(a, 0);
  for (auto [u, v] : edges) ++deg[u];
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

void BipartiteInstance::validate() const {
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= a || v >= b) throw InputError("bipartite edge out of range");
    if (!seen.insert({u, v}).second) throw InputError("duplicate bipartite edge");
  }
  if (colors.empty()) return;
  if (colors.size() != edges.size()) throw InputError("color list does not match the edges");
  std::set<std::pair<std::size_t, Color>> at_a, at_b;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!at_a.insert({edges[i].first, colors[i]}).second || !at_b.insert({edges[i].second, colors[i]}).second)
      throw InputError("bipartite coloring is not proper");
  }
}

BipartiteInstance complete_bipartite_instance(std::size_t a, std::size_t b) {
  BipartiteInstance inst{a, b, {}, {}, "K_{" + std::to_string(a) + "," + std::to_string(b) + "}"};
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) inst.edges.emplace_back(u, v);
  return inst;
}

BipartiteInstance random_bipartite_instance(std::size_t a, std::size_t b, std::size_t degree, std::uint64_t seed) {
  if (degree > b) throw InputError("degree exceeds the B side");
  BipartiteInstance inst{a, b, {}, {}, ""};
  inst.name = "random(" + std::to_string(a) + ";" + std::to_string(b) + ";" + std::to_string(degree) + ";" +
              std::to_string(seed) + ")";
  Rng rng(seed);
  for (std::size_t u = 0; u < a; ++u) {
    std::set<Vertex> picked;
    while (picked.size() < degree) picked.insert(static_cast<Vertex>(rng.below(b)));
    for (Vertex v : picked) inst.edges.emplace_back(static_cast<Vertex>(u), v);
  }
  return inst;
}

BipartiteInstance star_instance(std::size_t centers, std::size_t leaves) {
  BipartiteInstance inst{centers * leaves, centers, {}, {}, ""};
  inst.name = "stars(" + std::to_string(centers) + ";" + std::to_string(leaves) + ")";
  for (std::size_t c = 0; c < centers; ++c)
    for (std::size_t l = 0; l < leaves; ++l) inst.edges.emplace_back(static_cast<Vertex>(c * leaves + l), c);
  return inst;
}

BipartiteInstance private_star_instance(std::size_t a, std::size_t leaves) {
  BipartiteInstance inst{a, a * leaves, {}, {}, ""};
  inst.name = "private-stars(" + std::to_string(a) + ";" + std::to_string(leaves) + ")";
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t j = 0; j < leaves; ++j) {
      inst.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(u * leaves + j));
      inst.colors.push_back(static_cast<Color>(j));
    }
  return inst;
}

BipartiteInstance properly_colored(BipartiteInstance inst) {
  inst.colors.assign(inst.edges.size(), 0);
  const std::size_t m = std::max(inst.a, inst.b);
  for (std::size_t i = 0; i < inst.edges.size(); ++i)
    inst.colors[i] = static_cast<Color>((inst.edges[i].first + inst.edges[i].second) % m);
  try {
    inst.validate();
    return inst;
  } catch (const InputError&) {
  }
  std::vector<std::set<Color>> used_a(inst.a), used_b(inst.b);
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    auto [u, v] = inst.edges[i];
    Color c = 0;
    while (used_a[u].count(c) || used_b[v].count(c)) ++c;
    inst.colors[i] = c;
    used_a[u].insert(c);
    used_b[v].insert(c);
  }
  return inst;
}

TrialReport estimate_neighborhood_sampling(const BipartiteInstance& inst, const SamplingOptions& opt) {
  check_sampling(opt, false);
  inst.validate();
  auto start = std::chrono::steady_clock::now();
  TrialReport r;
  r.lemma = "neighborhood-sampling";
  r.instance = inst.name;
  r.trials = opt.trials;
  r.lambda = opt.lambda;
  r.p = opt.p;
  r.p_c = 1;
  r.seed = opt.seed;
  std::vector<std::size_t> deg_b(inst.b, 0);
  std::vector<std::vector<Vertex>> adj_a(inst.a);
  for (auto [u, v] : inst.edges) {
    ++deg_b[v];
    adj_a[u].push_back(v);
  }
  for (std::size_t d : deg_b) r.mu += hit_probability(d, opt.p);
  const double lg = std::log2(opt.lambda / opt.p);
  r.threshold = r.mu / (64 * opt.lambda * lg);
  const double cap = r.mu / (32 * opt.lambda * lg);
  r.hypotheses_ok = static_cast<double>(inst.max_a_degree()) <= cap;
  if (!r.hypotheses_ok) r.hypothesis_note = "max A-degree " + std::to_string(inst.max_a_degree()) + " > " + fmt(cap);
  r.bound = 2 * std::exp(-opt.lambda);
  r.successes = count_trials(opt.trials, opt.seed, opt.threads, [&](Rng& rng) {
    std::vector<char> hit(inst.b, 0);
    std::size_t size = 0;
    for (std::size_t u = 0; u < inst.a; ++u) {
      if (!rng.bernoulli(opt.p)) continue;
      for (Vertex v : adj_a[u]) size += !hit[v], hit[v] = 1;
    }
    return static_cast<double>(size) > r.threshold;
  });
  finish(r);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

TrialReport estimate_colored_sampling(const BipartiteInstance& inst, const SamplingOptions& opt) {
  check_sampling(opt, true);
  if (inst.colors.empty()) throw InputError("colored sampling needs an edge coloring");
  inst.validate();
  auto start = std::chrono::steady_clock::now();
  TrialReport r;
  r.lemma = "colored-sampling";
  r.instance = inst.name;
  r.trials = opt.trials;
  r.lambda = opt.lambda;
  r.p = opt.p;
  r.p_c = opt.p_c;
  r.seed = opt.seed;
  const double q = opt.p * opt.p_c;
  std::vector<std::size_t> deg_b(inst.b, 0);
  std::vector<std::vector<std::pair<Vertex, Color>>> adj_a(inst.a);
  Color num_colors = 0;
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    auto [u, v] = inst.edges[i];
    ++deg_b[v];
    adj_a[u].push_back({v, inst.colors[i]});
    num_colors = std::max(num_colors, inst.colors[i] + 1);
  }
  // Edges at a B vertex have distinct A ends and distinct colors, so they
  // survive independently with probability p p_c.
  for (std::size_t d : deg_b) r.mu += hit_probability(d, q);
  const double lg = std::log2(opt.lambda / q);
  r.threshold = r.mu / (64 * opt.lambda * lg);
  const double cap = r.mu / (128 * opt.lambda * lg);
  const double lhs = static_cast<double>(inst.max_a_degree() + inst.a);
  r.hypotheses_ok = lhs <= cap;
  if (!r.hypotheses_ok) r.hypothesis_note = "K + |A| = " + fmt(lhs) + " > " + fmt(cap);
  r.bound = 2 * std::exp(-opt.lambda);
  r.successes = count_trials(opt.trials, opt.seed, opt.threads, [&](Rng& rng) {
    std::vector<char> in_u(inst.a), in_q(num_colors), hit(inst.b, 0);
    for (std::size_t u = 0; u < inst.a; ++u) in_u[u] = rng.bernoulli(opt.p);
    for (Color c = 0; c < num_colors; ++c) in_q[c] = rng.bernoulli(opt.p_c);
    std::size_t size = 0;
    for (std::size_t u = 0; u < inst.a; ++u) {
      if (!in_u[u]) continue;
      for (auto [v, c] : adj_a[u])
        if (in_q[c]) size += !hit[v], hit[v] = 1;
    }
    return static_cast<double>(size) > r.threshold;
  });
  finish(r);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

TrialReport estimate_master(const ColoredGraph& g, const MasterOptions& opt) {
  const SamplingOptions& s = opt.sampling;
  if (!(s.p > 0 && s.p <= 1) || !(s.p_c > 0 && s.p_c <= 1)) throw InputError("p and p_c must lie in (0, 1]");
  if (!(s.lambda > 0)) throw InputError("lambda must be positive");
  if (s.trials == 0) throw InputError("trials must be positive");
  const std::size_t n = g.num_vertices();
  VertexSet b = make_vertex_set(opt.b, n);
  if (b.empty()) throw InputError("the sampled set B is empty");
  if (!opt.phi.empty()) opt.phi.validate(n, g.num_colors());
  auto start = std::chrono::steady_clock::now();
  TrialReport r;
  r.lemma = "master";
  r.instance = "n=" + std::to_string(n) + " |B|=" + std::to_string(b.size());
  r.trials = s.trials;
  r.lambda = s.lambda;
  r.p = s.p;
  r.p_c = s.p_c;
  r.seed = s.seed;
  const double q = s.p * s.p_c;
  const double d = g.graph().average_degree();
  const double nb = static_cast<double>(b.size());
  const double first = d * q * opt.alpha / (64 * std::pow(s.lambda, 5));
  const double second = std::pow(static_cast<double>(n) / (2 * nb), opt.alpha / (1 + opt.alpha)) - 1;
  r.threshold = nb / 4 * std::min(first, second);
  r.bound = 2 * std::exp(-s.lambda);

  std::vector<std::pair<bool, std::string>> hyp;
  hyp.push_back({opt.alpha > 0 && opt.alpha < 0.5, "alpha outside (0, 1/2)"});
  hyp.push_back({s.lambda > 1e10 * std::log(2 / q), "lambda <= 1e10 log(2/(p p_c))"});
  bool maximal = n <= kExactVertexCap ? verify_alpha_maximal_exact(g.graph(), opt.alpha).maximal
                                      : verify_alpha_maximal_sampled(g.graph(), opt.alpha, 2000, s.seed).maximal;
  hyp.push_back({maximal, "graph is not alpha-maximal"});
  hyp.push_back({d >= std::pow(s.lambda, 3) / (opt.alpha * q), "d < lambda^3 / (alpha p p_c)"});
  bool phi_ok = true;
  if (!opt.phi.empty())
    for (Vertex v = 0; v < n; ++v) phi_ok = phi_ok && static_cast<double>(opt.phi.entry_count(v)) <= d * opt.alpha / 32;
  hyp.push_back({phi_ok, "|phi(v)| > d alpha / 32"});
  hyp.push_back({2 * std::pow(s.lambda, 6) / q < nb && nb < static_cast<double>(n) / 2,
                 "|B| outside (2 lambda^6 / (p p_c), n/2)"});
  r.hypotheses_ok = true;
  for (const auto& [ok, note] : hyp)
    if (!ok && r.hypotheses_ok) {
      r.hypotheses_ok = false;
      r.hypothesis_note = note;
    }

  ForbiddenMap phi = opt.phi.empty() ? ForbiddenMap(n) : opt.phi;
  r.successes = count_trials(s.trials, s.seed, s.threads, [&](Rng& rng) {
    VertexSet u;
    for (Vertex v : b)
      if (rng.bernoulli(s.p)) u.push_back(v);
    ColorSet qs;
    for (Color c = 0; c < g.num_colors(); ++c)
      if (rng.bernoulli(s.p_c)) qs.push_back(c);
    VertexSet nbh = restricted_neighborhood(g, u, qs, phi);
    std::size_t outside = 0;
    for (Vertex y : nbh) outside += !std::binary_search(b.begin(), b.end(), y);
    return static_cast<double>(outside) >= r.threshold;
  });
  finish(r);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

void check_reach(const ReachOptions& opt) {
  const SamplingOptions& s = opt.sampling;
  if (!(s.p >= 0 && s.p <= 1) || !(s.p_c >= 0 && s.p_c <= 1)) throw InputError("p and p_c must lie in [0, 1]");
  if (!(opt.tau > 0 && opt.tau < 0.5)) throw InputError("tau must lie in (0, 1/2)");
  if (opt.ell == 0) throw InputError("ell must be positive");
  if (s.trials == 0) throw InputError("trials must be positive");
}

std::vector<std::vector<std::uint32_t>> sprinkled(std::size_t universe, std::size_t rounds, double p, Rng& rng) {
  if (rounds == 0) return {{}};
  if (p <= 0) return std::vector<std::vector<std::uint32_t>>(rounds);
  return sprinkle(universe, rounds, sprinkle_probability(p, rounds), rng);
}

}  // namespace

TrialReport estimate_reach(const ColoredGraph& g, const ReachOptions& opt) {
  check_reach(opt);
  const SamplingOptions& s = opt.sampling;
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("empty graph");
  auto start = std::chrono::steady_clock::now();
  TrialReport r;
  r.lemma = "reach";
  r.instance = "n=" + std::to_string(n) + " ell=" + std::to_string(opt.ell) + " tau=" + fmt(opt.tau);
  r.trials = s.trials;
  r.lambda = s.lambda;
  r.p = s.p;
  r.p_c = s.p_c;
  r.seed = s.seed;
  r.threshold = std::pow(static_cast<double>(n), 1 - opt.tau);
  r.bound = 2 * std::exp(-s.lambda);
  r.hypotheses_ok = false;
  r.hypothesis_note = "asymptotic lemma; reported only";
  r.successes = count_trials(s.trials, s.seed, s.threads, [&](Rng& rng) {
    Vertex source = static_cast<Vertex>(rng.below(n));
    auto u_rounds = sprinkled(n, opt.ell - 1, s.p, rng);
    auto q_rounds = sprinkled(g.num_colors(), opt.ell, s.p_c, rng);
    ReachSet reach = uq_reach(g, source, u_rounds, q_rounds, opt.ell);
    return static_cast<double>(reach.reached().size()) >= r.threshold;
  });
  finish(r);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

TrialReport estimate_reach(const RGraph& g, const ReachOptions& opt) {
  check_reach(opt);
  const SamplingOptions& s = opt.sampling;
  if (g.num_edges() == 0) throw InputError("empty r-graph");
  if (opt.ell + 1 < g.r()) throw InputError("ell must be at least r - 1");
  auto start = std::chrono::steady_clock::now();
  TrialReport r;
  r.lemma = "reach-faces";
  r.instance = "r=" + std::to_string(g.r()) + " faces=" + std::to_string(g.num_faces()) +
               " ell=" + std::to_string(opt.ell) + " tau=" + fmt(opt.tau);
  r.trials = s.trials;
  r.lambda = s.lambda;
  r.p = s.p;
  r.p_c = 1;
  r.seed = s.seed;
  r.threshold = std::pow(static_cast<double>(g.num_faces()), 1 - opt.tau);
  r.bound = 2 * std::exp(-s.lambda);
  r.hypotheses_ok = false;
  r.hypothesis_note = "asymptotic lemma; reported only";
  const std::size_t steps = opt.ell + 1 - g.r();
  r.successes = count_trials(s.trials, s.seed, s.threads, [&](Rng& rng) {
    const Face& f0 = g.faces()[rng.below(g.num_faces())];
    VertexSet u;
    for (Vertex v : g.vertices())
      if (rng.bernoulli(s.p)) u.push_back(v);
    auto levels = sampled_reach_faces(g, f0, std::vector<VertexSet>(steps, u));
    std::size_t reached = 0;
    for (const auto& lv : levels) reached += lv.faces.size();
    return static_cast<double>(reached) >= r.threshold;
  });
  finish(r);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string reports_csv(const std::vector<TrialReport>& reports) {
  std::ostringstream out;
  out << "version,lemma,instance,trials,successes,failure_rate,bound,slack,within_bound,hypotheses_ok,"
         "hypothesis_note,lambda,p,p_c,mu,threshold,seed\n";
  for (const auto& r : reports)
    out << 1 << ',' << r.lemma << ",\"" << r.instance << "\"," << r.trials << ',' << r.successes << ','
        << fmt(r.failure_rate) << ',' << fmt(r.bound) << ',' << fmt(r.slack) << ',' << (r.within_bound ? 1 : 0)
        << ',' << (r.hypotheses_ok ? 1 : 0) << ",\"" << r.hypothesis_note << "\"," << fmt(r.lambda) << ','
        << fmt(r.p) << ',' << fmt(r.p_c) << ',' << fmt(r.mu) << ',' << fmt(r.threshold) << ',' << r.seed << '\n';
  return out.str();
}

std::string reports_json(const std::vector<TrialReport>& reports) {
  nlohmann::json j;
  j["format"] = "rsub-mc-report";
  j["version"] = 1;
  auto& arr = j["reports"] = nlohmann::json::array();
  for (const auto& r : reports)
    arr.push_back({{"lemma", r.lemma},
                   {"instance", r.instance},
                   {"trials", r.trials},
                   {"successes", r.successes},
                   {"failure_rate", r.failure_rate},
                   {"bound", r.bound},
                   {"slack", r.slack},
                   {"within_bound", r.within_bound},
                   {"hypotheses_ok", r.hypotheses_ok},
                   {"hypothesis_note", r.hypothesis_note},
                   {"lambda", r.lambda},
                   {"p", r.p},
                   {"p_c", r.p_c},
                   {"mu", r.mu},
                   {"threshold", r.threshold},
                   {"seed", r.seed}});
  return j.dump(1) + "\n";
}

std::string chernoff_csv(const std::vector<ChernoffCheck>& checks) {
  std::ostringstream out;
  out << "version,n,prob,mu,trials,hits,empirical,bound,slack,ok\n";
  for (const auto& c : checks)
    out << 1 << ',' << c.n << ',' << fmt(c.prob) << ',' << fmt(c.mu) << ',' << c.trials << ',' << c.hits << ','
        << fmt(c.empirical) << ',' << fmt(c.bound) << ',' << fmt(c.slack) << ',' << (c.ok ? 1 : 0) << '\n';
  return out.str();
}

std::string inequalities_csv(const std::vector<InequalityCheck>& checks) {
  std::ostringstream out;
  out << "version,inequality,checked,skipped,failures,ok\n";
  for (const auto& c : checks)
    out << 1 << ",\"" << c.name << "\"," << c.checked << ',' << c.skipped << ',' << c.failures << ','
        << (c.ok() ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace rsub
