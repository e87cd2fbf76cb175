#include "rsub_tools/acceptance.hpp"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "rsub/constructions.hpp"
#include "rsub/density.hpp"
#include "rsub/errors.hpp"
#include "rsub/generators.hpp"
#include "rsub/graph_io.hpp"
#include "rsub/hypergraph.hpp"
#include "rsub/montecarlo.hpp"
#include "rsub/rainbow.hpp"
#include "rsub_tools/cli.hpp"

namespace rsub::tools {

namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double elapsed(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

// Counts violations per invariant and keeps the first example of each.
class Tally {
 public:
  void fail(const std::string& invariant, const std::string& example) {
    auto& [count, first] = entries_[invariant];
    if (count++ == 0) first = example;
  }
  bool clean() const { return entries_.empty(); }
  std::string summary() const {
    std::ostringstream out;
    bool sep = false;
    for (const auto& [name, entry] : entries_) {
      out << (sep ? "; " : "") << name << " x" << entry.first << " (first: " << entry.second << ")";
      sep = true;
    }
    return out.str();
  }

 private:
  std::map<std::string, std::pair<std::size_t, std::string>> entries_;
};

std::string describe(const std::vector<Edge>& edges, std::size_t n) {
  std::ostringstream out;
  out << "n=" << n << " edges=[";
  for (std::size_t i = 0; i < edges.size(); ++i) out << (i ? " " : "") << edges[i].first << "-" << edges[i].second;
  out << "]";
  return out.str();
}

std::string describe(const FaceWalk& w) {
  std::ostringstream out;
  out << "faces=[";
  for (std::size_t i = 0; i < w.faces.size(); ++i) {
    out << (i ? " " : "") << "{";
    for (std::size_t j = 0; j < w.faces[i].size(); ++j) out << (j ? "," : "") << w.faces[i][j];
    out << "}";
  }
  out << "]";
  return out.str();
}

std::string describe(const RGraph& g) {
  std::ostringstream out;
  out << "r=" << g.r() << " e=" << g.num_edges() << " [";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    out << (i ? " " : "");
    for (std::size_t j = 0; j < g.edges()[i].size(); ++j) out << (j ? "," : "") << g.edges()[i][j];
  }
  out << "]";
  return out.str();
}

Outcome maximal_graph_suite() {
  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  std::size_t graphs = 0, runs = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& edges : nonisomorphic_graphs(n)) {
      ++graphs;
      SimpleGraph g(n, edges);
      for (double alpha : {0.1, 0.25, 0.5}) {
        ++runs;
        auto best = alpha_max_subgraph_exact(g, alpha);
        auto h = induced_subgraph(g, best.vertices).graph;
        auto rep = check_maximal_properties(h, alpha);
        const std::string where = describe(edges, n) + " alpha=" + std::to_string(alpha);
        if (!rep.constant_ok) tally.fail("(i) c > 1/2", where);
        if (!rep.min_degree_ok) tally.fail("(ii) min degree >= d/2", where);
        if (!rep.edge_bounds_ok) tally.fail("(iii) edge expansion", where);
        if (!rep.vertex_bounds_ok) tally.fail("(iv) vertex expansion", where);
      }
    }
  const double secs = elapsed(start);
  std::ostringstream d;
  d << "graphs=" << graphs << " runs=" << runs;
  if (!tally.clean()) d << " violations: " << tally.summary();
  if (secs >= 300) d << " runtime over 5 minutes";
  return {tally.clean() && secs < 300, d.str()};
}

Outcome maximal_rgraph_suite(std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  Rng rng = Rng::stream(seed, 2);
  std::size_t runs = 0, expansion_sets = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 5 + rng.below(4);
    const std::size_t triples = n * (n - 1) * (n - 2) / 6;
    const std::size_t m = 1 + rng.below(std::min<std::size_t>(12, triples));
    auto g = random_rgraph_edges(n, 3, m, rng);
    for (double alpha : {0.1, 0.25, 0.4}) {
      ++runs;
      auto best = alpha_max_rgraph(g, alpha, ExtractMode::kExact);
      auto rep = verify_hypmax(best.graph, alpha);
      expansion_sets += rep.sets_checked;
      const std::string where = describe(g) + " alpha=" + std::to_string(alpha);
      if (!rep.c_ok) tally.fail("(i) c > 1/2", where);
      if (!rep.mindeg_ok) tally.fail("(ii) face degree >= d/r", where);
      if (!rep.expansion_ok) tally.fail("(iii) face expansion", where);
    }
  }
  const double secs = elapsed(start);
  std::ostringstream d;
  d << "graphs=200 runs=" << runs << " expansion sets checked=" << expansion_sets;
  if (!tally.clean()) d << " violations: " << tally.summary();
  if (secs >= 120) d << " runtime over 2 minutes";
  return {tally.clean() && secs < 120, d.str()};
}

Outcome rainbow_free_hypercube(std::uint64_t seed) {
  Tally tally;
  for (std::size_t m : {2u, 3u, 4u}) {
    auto q = hypercube_colored(m);
    auto exact = find_rainbow_cycle_exact(q, q.num_vertices());
    if (exact.status != SearchStatus::kNone)
      tally.fail("exact finder", "m=" + std::to_string(m) + " status=" + to_string(exact.status));
    SampleConfig config;
    config.seed = seed;
    config.retries = 32;
    if (find_rainbow_cycle(q, config)) tally.fail("sampled finder", "m=" + std::to_string(m));
  }
  return {tally.clean(), tally.clean() ? "m=2,3,4 exact none, sampled none over 32 retries" : tally.summary()};
}

bool internally_disjoint(const FaceWalk& a, const FaceWalk& b) {
  auto ia = internal_vertices(a), ib = internal_vertices(b);
  std::vector<Vertex> common;
  std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(common));
  return common.empty();
}

Outcome cycle_topology(std::uint64_t seed, const SurfaceClassifier& classifier) {
  std::vector<FaceWalk> cycles;
  for (std::size_t len = 5; len <= 14; ++len) cycles.push_back(tight_cycle(len));
  Rng rng = Rng::stream(seed, 4);
  for (int i = 0; i < 50; ++i) cycles.push_back(random_face_cycle(3, 5 + rng.below(10), rng));
  Tally tally;
  std::size_t partite = 0;
  for (const auto& c : cycles) {
    const std::string where = "len=" + std::to_string(c.length()) + " " + describe(c);
    if (euler_characteristic(c) != 0)
      tally.fail("euler characteristic 0", where + " chi=" + std::to_string(euler_characteristic(c)));
    try {
      auto [a, b] = split_cycle(c);
      if (classify_walk(a) != WalkKind::kProperPath || classify_walk(b) != WalkKind::kProperPath ||
          !internally_disjoint(a, b))
        tally.fail("split into two internally disjoint proper paths", where);
    } catch (const std::exception& e) {
      tally.fail("split into two internally disjoint proper paths", where + " " + e.what());
    }
    if (!three_partition(c.complex())) continue;
    ++partite;
    try {
      Surface got = classifier(c);
      if (got != parity_surface(c.length()))
        tally.fail("classify_surface parity", where + " expected " + to_string(parity_surface(c.length())) +
                                                   " got " + to_string(got));
    } catch (const std::exception& e) {
      tally.fail("classify_surface parity", where + " " + e.what());
    }
  }
  std::ostringstream d;
  d << "cycles=" << cycles.size() << " three-partite=" << partite;
  if (!tally.clean()) d << " mismatches: " << tally.summary();
  return {tally.clean(), d.str()};
}

Outcome min_degree_cleaning(std::uint64_t seed) {
  Rng rng = Rng::stream(seed, 5);
  Tally tally;
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = i % 2 ? 4 : 3;
    const std::size_t n = 6 + rng.below(5);
    const double p = 0.2 + 0.4 * rng.uniform();
    RGraph g;
    do g = random_rgraph(n, r, p, rng);
    while (g.num_edges() == 0);
    const std::string where = describe(g);
    auto h = mindeg_subhypergraph(g);
    if (h.num_edges() == 0) {
      tally.fail("nonempty output", where);
      continue;
    }
    const double bound = g.average_degree() / static_cast<double>(r);
    if (static_cast<double>(h.min_face_degree()) < bound - 1e-9) tally.fail("min face degree >= d(G)/r", where);
    auto rep = vertex_face_degree_check(h, static_cast<double>(h.min_face_degree()));
    if (!rep.precondition_met || !rep.all_pass) tally.fail("deg_P(v) <= r p / d", where);
  }
  return {tally.clean(), tally.clean() ? "graphs=200 (r=3,4) violations=0" : tally.summary()};
}

Outcome long_paths(std::uint64_t seed) {
  Rng rng = Rng::stream(seed, 6);
  constexpr int kMaxRedraws = 20;
  Tally tally;
  std::size_t runs = 0, draws = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t len = i % 2 ? 5 : 4;
    const std::size_t r = 3;
    const std::string where = "instance " + std::to_string(i) + " len=" + std::to_string(len);
    // Redraw until cleaning leaves a nonempty graph; redraws are reported.
    RGraph g;
    for (int attempt = 0; attempt < kMaxRedraws && g.num_edges() == 0; ++attempt, ++draws)
      g = face_core(mindeg_subhypergraph(random_rgraph(40, r, 0.97, rng)), 2 * r * len);
    if (g.num_edges() == 0) {
      tally.fail("cleaned instance nonempty", where);
      continue;
    }
    const double d = static_cast<double>(g.min_face_degree());
    const auto needed =
        static_cast<std::size_t>(std::ceil(2.0 * r * len * static_cast<double>(g.num_faces()) / d - 1e-9));
    FaceSet all = g.faces();
    rng.shuffle(all);
    all.resize(std::min(all.size(), needed));
    FaceSet f = make_face_set(all);
    ++runs;
    auto res = path_between_face_set(g, f, len);
    if (!res.within_guarantee) {
      tally.fail("face set meets the size hypothesis", where);
      continue;
    }
    if (!res.path) {
      tally.fail("path found", where);
      continue;
    }
    const auto& path = *res.path;
    const bool ends_in_f = std::binary_search(f.begin(), f.end(), path.faces.front()) &&
                           std::binary_search(f.begin(), f.end(), path.faces.back());
    if (path.length() != len || classify_walk(path) != WalkKind::kProperPath || !walk_in_host(path, g) || !ends_in_f)
      tally.fail("path validates", where + " " + describe(path));
  }
  std::ostringstream d;
  d << "instances=" << runs << " (len 4 and 5) draws=" << draws;
  if (!tally.clean()) d << " failures: " << tally.summary();
  return {tally.clean() && runs == 50, d.str()};
}

Outcome monte_carlo_bounds(std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<BipartiteInstance> instances;
  for (std::size_t i = 0; i < 5; ++i) instances.push_back(private_star_instance(500 + 100 * i, 1 + i % 3));
  for (std::size_t i = 0; i < 5; ++i)
    instances.push_back(random_bipartite_instance(600 + 100 * i, 3000, 2, Rng::stream(seed, 70 + i).next()));
  Tally tally;
  std::size_t runs = 0;
  for (const auto& inst : instances)
    for (double lambda : {2.0, 3.0}) {
      SamplingOptions opt;
      opt.p = 0.5;
      opt.lambda = lambda;
      opt.trials = 10'000;
      opt.seed = seed;
      auto r = estimate_neighborhood_sampling(inst, opt);
      ++runs;
      const std::string where = inst.name + " lambda=" + std::to_string(lambda);
      if (!r.asserted()) {
        tally.fail("instance meets the degree-cap hypothesis", where + " " + r.hypothesis_note);
        continue;
      }
      if (!r.within_bound)
        tally.fail("failure rate <= 2e^-lambda + 3 sigma", where + " rate=" + std::to_string(r.failure_rate));
    }
  for (double mu : {4.0, 8.0, 16.0}) {
    auto c = check_chernoff_lower_tail(static_cast<std::size_t>(2 * mu), 0.5, 100'000, seed);
    if (!c.ok) tally.fail("Chernoff lower tail", "mu=" + std::to_string(mu) + " empirical=" + std::to_string(c.empirical));
  }
  std::size_t points = 0;
  for (const auto& c : numeric_inequality_suite()) {
    points += c.checked;
    if (!c.ok()) tally.fail("inequality grid", c.name + " failures=" + std::to_string(c.failures));
  }
  const double secs = elapsed(start);
  std::ostringstream d;
  d << "sampling runs=" << runs << " chernoff mu=4,8,16 grid points=" << points;
  if (!tally.clean()) d << " failures: " << tally.summary();
  if (secs >= 600) d << " runtime over 10 minutes";
  return {tally.clean() && secs < 600, d.str()};
}

Outcome construction_certification(std::uint64_t seed) {
  Tally tally;
  std::size_t scans = 0;
  for (auto [n, alpha] : {std::pair<std::size_t, double>{30, 0.34}, {40, 0.25}})
    for (std::uint64_t s = 0; s < 10; ++s) {
      auto res = random_short_cycle_free_3graph(n, alpha, seed + s);
      const auto cap = static_cast<std::size_t>(std::floor(1 / alpha));
      ++scans;
      if (auto c = find_short_surface_cycle(res.graph, cap))
        tally.fail("no short cylinder or Moebius cycle", "n=" + std::to_string(n) + " seed=" +
                                                             std::to_string(seed + s) + " " + describe(*c));
    }
  Rng rng = Rng::stream(seed, 8);
  for (int i = 0; i < 20; ++i) {
    auto c = random_face_cycle(3, 5 + rng.below(10), rng);
    const std::size_t m = c.vertex_union().back() + 1;
    const std::string where = "len=" + std::to_string(c.length()) + " " + describe(c);
    try {
      auto emb = embed_cycle_in_hypercube(c, m);
      if (emb.vertices.size() != 2 * c.length() || !check_hypercube_embedding(c, emb))
        tally.fail("hypercube image is a simple 2l-cycle with supports in E(C)", where);
    } catch (const InputError& e) {
      tally.fail("hypercube image is a simple 2l-cycle with supports in E(C)", where + " " + e.what());
    }
  }
  std::ostringstream d;
  d << "rescans=" << scans << " embeddings=20";
  if (!tally.clean()) d << " failures: " << tally.summary();
  return {tally.clean(), d.str()};
}

// Independent oracle: a 1-subdivision of K_3 is a (not necessarily induced) 6-cycle.
bool has_six_cycle(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> path;
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self) -> bool {
    if (path.size() == 6) return g.has_edge(path.back(), path.front());
    for (Vertex w = path.front() + 1; w < n; ++w) {
      if (used[w] || !g.has_edge(path.back(), w)) continue;
      used[w] = 1;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    if (extend(extend)) return true;
  }
  return false;
}

std::vector<std::pair<std::string, SimpleGraph>> peel_test_graphs(std::uint64_t seed) {
  std::vector<std::pair<std::string, SimpleGraph>> out;
  for (std::size_t n = 3; n <= 8; ++n) out.emplace_back("K" + std::to_string(n), complete_graph(n));
  for (std::size_t n = 3; n <= 14; ++n) out.emplace_back("C" + std::to_string(n), cycle_graph(n));
  for (std::size_t n = 2; n <= 14; n += 4) out.emplace_back("P" + std::to_string(n), path_graph(n));
  out.emplace_back("petersen", petersen_graph());
  out.emplace_back("K3,3", complete_bipartite(3, 3));
  out.emplace_back("K4,6", complete_bipartite(4, 6));
  out.emplace_back("Q3", hypercube_colored(3).graph());
  out.emplace_back("K5+C5", disjoint_union(complete_graph(5), cycle_graph(5)));
  Rng rng = Rng::stream(seed, 9);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 5 + rng.below(10);
    const double p = 0.2 + 0.5 * rng.uniform();
    out.emplace_back("gnp#" + std::to_string(i) + "(n=" + std::to_string(n) + ")", random_gnp(n, p, rng));
  }
  return out;
}

Outcome oracle_equivalence(std::uint64_t seed) {
  Tally tally;
  // One-subdivision finder against the six-cycle oracle.
  std::size_t subdivision_checks = 0;
  std::vector<SimpleGraph> small;
  for (std::size_t n = 3; n <= 7; ++n)
    for (const auto& edges : nonisomorphic_graphs(n)) small.emplace_back(n, edges);
  Rng rng = Rng::stream(seed, 10);
  for (int i = 0; i < 300; ++i) small.push_back(random_gnp(8 + rng.below(2), 0.15 + 0.35 * rng.uniform(), rng));
  for (const auto& g : small) {
    ++subdivision_checks;
    auto found = find_one_subdivision(g, 3);
    const bool oracle = has_six_cycle(g);
    if (found.has_value() != oracle)
      tally.fail("one-subdivision agrees with exhaustive search", describe(g.edges(), g.num_vertices()));
    else if (found && !validate_subdivision(g, *found))
      tally.fail("one-subdivision certificate validates", describe(g.edges(), g.num_vertices()));
  }
  // Face-cycle pipeline certificates.
  std::size_t pipeline_found = 0;
  for (int i = 0; i < 6; ++i) {
    auto g = random_rgraph(14 + rng.below(3), 3, 0.55, rng);
    FaceCycleOptions opt;
    opt.mode = CycleMode::kPipeline;
    opt.seed = seed + static_cast<std::uint64_t>(i);
    for (std::size_t len : {8u, 9u, 10u}) {
      auto res = find_face_cycle(g, len, opt);
      if (res.status != SearchStatus::kFound) continue;
      ++pipeline_found;
      const auto& c = *res.cycle;
      if (c.length() != len || classify_walk(c) != WalkKind::kCycle || !walk_in_host(c, g))
        tally.fail("pipeline certificate validates", describe(c));
    }
  }
  // Peel extractor against the exact optimum.
  std::size_t peel_checks = 0;
  for (const auto& [name, g] : peel_test_graphs(seed))
    for (double alpha : {0.1, 0.25, 0.5}) {
      ++peel_checks;
      const double exact = alpha_max_subgraph_exact(g, alpha).score.score;
      const double peel = alpha_max_subgraph_peel(g, alpha).score.score;
      if (std::abs(exact - peel) > 1e-9 * std::max(1.0, exact)) {
        std::ostringstream w;
        w << name << " alpha=" << alpha << " exact=" << exact << " peel=" << peel;
        tally.fail("peel score equals exact score", w.str());
      }
    }
  std::ostringstream d;
  d << "subdivision graphs=" << subdivision_checks << " pipeline certificates=" << pipeline_found
    << " peel comparisons=" << peel_checks;
  if (!tally.clean()) d << " failures: " << tally.summary();
  return {tally.clean() && pipeline_found > 0, d.str()};
}

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return "<missing>";
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome determinism(std::uint64_t seed, const std::string& scratch) {
  fs::path dir = scratch.empty() ? fs::temp_directory_path() / ("rsub-acceptance-" + std::to_string(::getpid()))
                                 : fs::path(scratch);
  fs::create_directories(dir);
  auto file = [&](const std::string& name) { return (dir / name).string(); };
  {
    GraphData latin8 = graph_data(latin_colored_bipartite(8));
    save_graph(file("latin8.txt"), latin8);
    save_graph(file("latin12.txt"), graph_data(latin_colored_bipartite(12)));
    save_graph(file("k8.txt"), graph_data(greedy_proper_coloring(complete_graph(8))));
    Rng rng(seed);
    save_hypergraph(file("h14.txt"), random_rgraph(14, 3, 0.55, rng));
  }
  const std::string s = std::to_string(seed);
  const std::vector<std::vector<std::string>> commands = {
      {"construct", "girth", "--n", "60", "--ell", "1", "--seed", s, "--output", file("out.txt"), "--log",
       file("log.json")},
      {"construct", "3graph", "--n", "20", "--alpha", "0.2", "--seed", s, "--output", file("out.txt"), "--log",
       file("log.json")},
      {"rainbow-cycle", "--input", file("latin8.txt"), "--seed", s, "--output", file("out.json")},
      {"rainbow-subdivision", "--input", file("latin12.txt"), "--t", "3", "--seed", s, "--output", file("out.json")},
      {"large-subdivision", "--input", file("latin12.txt"), "--t", "3", "--ell", "1", "--seed", s, "--output",
       file("out.json")},
      {"hcycle", "--input", file("h14.txt"), "--ell", "8", "--mode", "pipeline", "--seed", s, "--output",
       file("out.json")},
      {"mc", "chernoff", "--n", "16", "--p", "0.5", "--trials", "2000", "--seed", s, "--output", file("out.csv")},
      {"mc", "neighborhood", "--a", "200", "--b", "600", "--degree", "2", "--trials", "1000", "--seed", s,
       "--output", file("out.csv"), "--summary", file("summary.json")},
      {"mc", "colored", "--a", "100", "--b", "300", "--degree", "3", "--p", "0.5", "--pc", "0.5", "--trials", "1000",
       "--seed", s, "--output", file("out.csv")},
      {"mc", "master", "--input", file("k8.txt"), "--b-size", "3", "--trials", "1000", "--seed", s, "--output",
       file("out.csv")},
      {"mc", "reach", "--input", file("k8.txt"), "--ell", "3", "--trials", "500", "--seed", s, "--output",
       file("out.csv")},
      {"mc", "reach-faces", "--input", file("h14.txt"), "--ell", "4", "--trials", "200", "--seed", s, "--output",
       file("out.csv")},
      {"report", "mc-trends", "--seed", s, "--output", file("out.csv")},
  };
  const std::vector<std::string> artifacts = {"out.txt", "log.json", "out.json", "out.csv", "summary.json"};
  Tally tally;
  for (const auto& cmd : commands) {
    std::vector<std::string> runs;
    for (int rep = 0; rep < 3; ++rep) {
      for (const auto& a : artifacts) fs::remove(dir / a);
      std::vector<std::string> args = {"rsub"};
      args.insert(args.end(), cmd.begin(), cmd.end());
      std::ostringstream out, err;
      int code = run_cli(args, out, err);
      std::string snapshot = "exit=" + std::to_string(code) + "\n" + out.str();
      for (const auto& a : artifacts) snapshot += "\n--" + a + "\n" + read_bytes(dir / a);
      runs.push_back(std::move(snapshot));
      if (code == kExitInputError) tally.fail("command runs", cmd[0] + " " + cmd[1] + ": " + err.str());
    }
    if (runs[0] != runs[1] || runs[0] != runs[2]) tally.fail("byte-identical artifacts", cmd[0] + " " + cmd[1]);
  }
  if (scratch.empty()) fs::remove_all(dir);
  std::ostringstream d;
  d << "commands=" << commands.size() << " runs=3 each";
  if (!tally.clean()) d << " failures: " << tally.summary();
  return {tally.clean(), d.str()};
}

}  // namespace

Surface flipped_surface_classifier(const FaceWalk& cycle) {
  return classify_surface(cycle) == Surface::kCylinder ? Surface::kMoebius : Surface::kCylinder;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const std::uint64_t seed = options.seed;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"alpha-maximal graph suite", [] { return maximal_graph_suite(); }},
      {"alpha-maximal r-graph suite", [&] { return maximal_rgraph_suite(seed); }},
      {"rainbow-free hypercube", [&] { return rainbow_free_hypercube(seed); }},
      {"cycle topology", [&] { return cycle_topology(seed, options.classifier); }},
      {"min-degree cleaning and vertex face degree", [&] { return min_degree_cleaning(seed); }},
      {"long proper paths between face sets", [&] { return long_paths(seed); }},
      {"Monte Carlo bounds", [&] { return monte_carlo_bounds(seed); }},
      {"construction certification", [&] { return construction_certification(seed); }},
      {"oracle equivalence", [&] { return oracle_equivalence(seed); }},
      {"determinism", [&] { return determinism(seed, options.scratch_dir); }},
  };
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    CriterionResult r;
    r.id = id;
    r.name = criteria[i].first;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = criteria[i].second();
      r.pass = o.pass;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = elapsed(start);
    results.push_back(std::move(r));
  }
  return results;
}

std::string acceptance_csv(const std::vector<CriterionResult>& results) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream out;
  out << "version,criterion,name,status,detail\n";
  for (const auto& r : results)
    out << 1 << ',' << r.id << ',' << quote(r.name) << ',' << (r.pass ? "PASS" : "FAIL") << ',' << quote(r.detail)
        << '\n';
  return out.str();
}

std::vector<std::vector<Edge>> nonisomorphic_graphs(std::size_t n) {
  if (n > 8) throw InputError("graph enumeration supports n <= 8");
  using Code = std::uint32_t;
  auto bit = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
  };
  // Minimal code over relabelings that list vertices by decreasing degree.
  auto canonical = [&](Code code) {
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (code >> bit(i, j) & 1) ++deg[i], ++deg[j];
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return deg[a] > deg[b] || (deg[a] == deg[b] && a < b); });
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && deg[order[j]] == deg[order[i]]) ++j;
      blocks.emplace_back(i, j);
      i = j;
    }
    Code best = ~Code{0};
    auto relabel = [&] {
      Code c = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (code >> bit(order[i], order[j]) & 1) c |= Code{1} << bit(i, j);
      best = std::min(best, c);
    };
    auto walk = [&](auto&& self, std::size_t b) -> void {
      if (b == blocks.size()) {
        relabel();
        return;
      }
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      std::sort(first, last);
      do self(self, b + 1);
      while (std::next_permutation(first, last));
    };
    walk(walk, 0);
    return best;
  };
  std::set<Code> level = {0};
  for (std::size_t k = 1; k < n; ++k) {
    // Graphs on k + 1 vertices: every graph on k vertices plus a new vertex k.
    // Codes always live on n vertices; the padding vertices are isolated.
    std::set<Code> next;
    for (Code g : level)
      for (Code nbrs = 0; nbrs < (Code{1} << k); ++nbrs) {
        Code c = g;
        for (std::size_t v = 0; v < k; ++v)
          if (nbrs >> v & 1) c |= Code{1} << bit(v, k);
        next.insert(canonical(c));
      }
    level = std::move(next);
  }
  std::vector<std::vector<Edge>> out;
  for (Code code : level) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (code >> bit(i, j) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    out.push_back(std::move(edges));
  }
  return out;
}

}  // namespace rsub::tools
