#include "rsub_tools/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsub/constructions.hpp"
#include "rsub/density.hpp"
#include "rsub/errors.hpp"
#include "rsub/generators.hpp"
#include "rsub/graph_io.hpp"
#include "rsub/hypergraph.hpp"
#include "rsub/montecarlo.hpp"
#include "rsub/rainbow.hpp"
#include "rsub/topo.hpp"
#include "rsub_tools/acceptance.hpp"

namespace rsub::tools {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;

struct RunConfig {
  std::string input;
  std::string output;
  std::string cert;
  std::string log;
  std::string summary;
  std::uint64_t seed = kDefaultSeed;
  double alpha = 0.25;
  std::size_t ell = 8;
  std::size_t t = 3;
  double p = 0.5;
  double p_c = 0.5;
  double lambda = 2.0;
  double tau = 0.25;
  std::size_t trials = 10'000;
  std::size_t retries = 32;
  std::string mode;
  std::size_t rounds = 1;
  std::size_t parts = 0;
  std::uint64_t budget = 50'000'000;
  std::size_t max_len = 0;
  std::size_t threads = 0;
  bool allow_improper = false;
  bool no_extract = false;
  bool plain = false;
  bool json_graph = false;
  bool surface = false;
  // construct / mc instance sizes
  std::size_t n = 0;
  std::size_t m = 4;
  std::size_t a = 400;
  std::size_t b = 2000;
  std::size_t degree = 2;
  std::size_t b_size = 3;
  std::size_t points = 100;
  std::uint64_t subset_cap = 5'000'000;
  std::string target;  // construct kind, mc estimator or report suite
  std::vector<int> only;
  std::string inject;
};

std::string resolve(const std::string& path) {
  if (path.empty() || path == "-") return path;
  std::filesystem::path p(path);
  const char* dir = std::getenv(kDataDirEnv);
  if (p.is_absolute() || !dir || !*dir) return path;
  return (std::filesystem::path(dir) / p).string();
}

std::string read_text(const std::string& path) {
  std::ifstream in(resolve(path), std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(resolve(cfg.output), std::ios::binary);
  if (!file) throw InputError("cannot write " + cfg.output);
  file << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(resolve(path), std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

void require_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
}

GraphData load_input_graph(const RunConfig& cfg) {
  require_input(cfg);
  return load_graph(resolve(cfg.input));
}

ColoredGraph load_colored(const RunConfig& cfg, std::ostream& err) {
  GraphData data = load_input_graph(cfg);
  if (!data.colored) throw InputError("the input graph carries no edge colors");
  ColoredGraph g = data.to_colored(!cfg.allow_improper);
  if (cfg.allow_improper && !check_proper_coloring(g)) err << "warning: the edge coloring is not proper\n";
  return g;
}

RGraph load_input_hypergraph(const RunConfig& cfg) {
  require_input(cfg);
  return load_hypergraph(resolve(cfg.input));
}

SampleConfig sample_config(const RunConfig& cfg) {
  SampleConfig c;
  c.p = cfg.p;
  c.p_c = cfg.p_c;
  c.lambda = cfg.lambda;
  c.ell = cfg.ell;
  c.tau = cfg.tau;
  c.rounds = cfg.rounds;
  c.seed = cfg.seed;
  c.retries = cfg.retries;
  c.parts = cfg.parts;
  c.extract_max_subgraph = !cfg.no_extract;
  c.node_budget = cfg.budget;
  c.validate();
  return c;
}

int exit_for(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return kExitFound;
    case SearchStatus::kNone: return kExitNone;
    case SearchStatus::kIndeterminate: return kExitIndeterminate;
  }
  return kExitInputError;
}

int report_none(std::ostream& err, const char* what) {
  err << "none: no " << what << " found\n";
  return kExitNone;
}

// ---- graph commands

int cmd_extract(const RunConfig& cfg, std::ostream& out) {
  GraphData data = load_input_graph(cfg);
  SimpleGraph g = data.to_simple();
  const bool peel = cfg.mode == "peel";
  DensityResult res = peel ? alpha_max_subgraph_peel(g, cfg.alpha) : alpha_max_subgraph_exact(g, cfg.alpha);
  auto h = induced_subgraph(g, res.vertices).graph;
  json j;
  j["format"] = "rsub-extract";
  j["version"] = 1;
  j["alpha"] = cfg.alpha;
  j["mode"] = peel ? "peel" : "exact";
  j["vertices"] = res.vertices;
  if (!data.vertex_labels.empty()) {
    std::vector<std::string> labels;
    for (Vertex v : res.vertices) labels.push_back(data.vertex_labels[v]);
    j["vertex_labels"] = labels;
  }
  j["num_vertices"] = h.num_vertices();
  j["num_edges"] = h.num_edges();
  j["score"] = res.score.score;
  j["c"] = res.score.c();
  emit(cfg, j.dump(1) + "\n", out);
  return g.num_edges() > 0 ? kExitFound : kExitNone;
}

int cmd_rainbow_cycle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ColoredGraph g = load_colored(cfg, err);
  std::optional<RainbowCycle> cycle;
  if (cfg.mode == "exact") {
    auto res = find_rainbow_cycle_exact(g, cfg.max_len ? cfg.max_len : g.num_vertices(), cfg.budget);
    if (res.status == SearchStatus::kIndeterminate) {
      err << "indeterminate: node budget exhausted after " << res.nodes << " nodes\n";
      return kExitIndeterminate;
    }
    cycle = res.cycle;
  } else {
    cycle = find_rainbow_cycle(g, sample_config(cfg));
  }
  if (!cycle) return report_none(err, "rainbow cycle");
  emit(cfg, rainbow_cycle_to_json(*cycle, graph_digest(g), cfg.seed), out);
  return kExitFound;
}

int cmd_rainbow_subdivision(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ColoredGraph g = load_colored(cfg, err);
  auto cert = find_rainbow_subdivision(g, cfg.t, sample_config(cfg));
  if (!cert) return report_none(err, "rainbow subdivision");
  emit(cfg, subdivision_to_json(*cert, graph_digest(g), cfg.seed), out);
  return kExitFound;
}

int cmd_large_subdivision(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  GraphData data = load_input_graph(cfg);
  std::optional<SubdivisionCert> cert;
  std::string digest;
  if (data.colored && !cfg.plain) {
    ColoredGraph g = data.to_colored(!cfg.allow_improper);
    cert = find_large_subdivision(g, cfg.t, cfg.ell, sample_config(cfg), true);
    digest = graph_digest(g);
  } else {
    SimpleGraph g = data.to_simple();
    cert = find_large_subdivision(g, cfg.t, cfg.ell, sample_config(cfg));
    digest = graph_digest(g);
  }
  if (!cert) return report_none(err, "subdivision");
  emit(cfg, subdivision_to_json(*cert, digest, cfg.seed), out);
  return kExitFound;
}

int cmd_one_subdivision(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SimpleGraph g = load_input_graph(cfg).to_simple();
  auto cert = find_one_subdivision(g, cfg.t);
  if (!cert) return report_none(err, "1-subdivision");
  emit(cfg, subdivision_to_json(*cert, graph_digest(g), cfg.seed), out);
  return kExitFound;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.cert.empty()) throw InputError("--cert is required");
  require_input(cfg);
  const std::string text = read_text(cfg.cert);
  std::string format;
  try {
    format = json::parse(text).value("format", "");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  std::vector<std::string> problems;
  if (format == "rsub-face-walk") {
    RGraph host = load_input_hypergraph(cfg);
    auto check = validate_face_cert(face_cert_from_json(text), host);
    if (!check.shape_ok) problems.push_back("malformed walk");
    if (check.shape_ok && !check.kind_ok) problems.push_back("declared kind does not match");
    if (!check.digest_ok) problems.push_back("host digest mismatch");
    if (check.shape_ok && !check.host_ok) problems.push_back("edge outside the host");
  } else {
    GraphCert cert = graph_cert_from_json(text);
    GraphData data = load_input_graph(cfg);
    GraphCertCheck check = data.colored ? validate_graph_cert(cert, data.to_colored(false))
                                        : validate_graph_cert(cert, data.to_simple());
    if (!check.digest_ok) problems.push_back("host digest mismatch");
    if (!check.structure_ok) problems.push_back("certificate does not validate");
  }
  if (problems.empty()) {
    out << "valid\n";
    return kExitFound;
  }
  std::string joined;
  for (const auto& p : problems) joined += (joined.empty() ? "" : ", ") + p;
  throw InputError("invalid certificate: " + joined);
}

// ---- hypergraph commands

int cmd_hextract(const RunConfig& cfg, std::ostream& out) {
  RGraph g = load_input_hypergraph(cfg);
  const bool peel = cfg.mode == "peel";
  auto res = alpha_max_rgraph(g, cfg.alpha, peel ? ExtractMode::kPeel : ExtractMode::kExact);
  json j;
  j["format"] = "rsub-hextract";
  j["version"] = 1;
  j["alpha"] = cfg.alpha;
  j["mode"] = peel ? "peel" : "exact";
  j["r"] = g.r();
  j["edge_indices"] = res.edge_indices;
  j["edges"] = res.graph.edges();
  j["num_faces"] = res.graph.num_faces();
  j["score"] = res.score;
  emit(cfg, j.dump(1) + "\n", out);
  return res.graph.num_edges() > 0 ? kExitFound : kExitNone;
}

int cmd_hverify(const RunConfig& cfg, std::ostream& out) {
  RGraph g = load_input_hypergraph(cfg);
  HypmaxOptions opt;
  opt.seed = cfg.seed;
  auto rep = verify_hypmax(g, cfg.alpha, opt);
  json j;
  j["format"] = "rsub-hverify";
  j["version"] = 1;
  j["alpha"] = cfg.alpha;
  j["seed"] = cfg.seed;
  j["empty"] = rep.empty;
  j["c"] = rep.c;
  j["c_ok"] = rep.c_ok;
  j["low_degree_faces"] = rep.low_degree_faces;
  j["mindeg_ok"] = rep.mindeg_ok;
  j["max_set_size"] = rep.max_set_size;
  j["sets_checked"] = rep.sets_checked;
  j["exhaustive"] = rep.exhaustive;
  j["expansion_violations"] = rep.expansion_violations;
  j["worst_slack"] = rep.worst_slack;
  j["expansion_ok"] = rep.expansion_ok;
  j["all_ok"] = rep.all_ok();
  emit(cfg, j.dump(1) + "\n", out);
  return rep.all_ok() ? kExitFound : kExitNone;
}

int cmd_hcycle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RGraph g = load_input_hypergraph(cfg);
  FaceCycleOptions opt;
  opt.mode = cfg.mode == "pipeline" ? CycleMode::kPipeline : CycleMode::kExact;
  opt.node_budget = cfg.budget;
  opt.require_surface = cfg.surface;
  opt.seed = cfg.seed;
  opt.retries = cfg.retries;
  opt.alpha = cfg.alpha;
  opt.threads = cfg.threads;
  if (cfg.parts) opt.parts = cfg.parts;
  auto res = find_face_cycle(g, cfg.ell, opt);
  if (res.status == SearchStatus::kFound) {
    emit(cfg, face_cert_to_json(*res.cycle, &g), out);
    return kExitFound;
  }
  err << to_string(res.status) << ": method " << res.method << ", " << res.nodes << " nodes\n";
  return exit_for(res.status);
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.cert.empty()) throw InputError("--cert is required");
  FaceCert cert = face_cert_from_json(read_text(cfg.cert));
  check_walk_shape(cert.walk);
  const WalkKind kind = classify_walk(cert.walk);
  json j;
  j["format"] = "rsub-classify";
  j["version"] = 1;
  j["kind"] = to_string(kind);
  j["declared_kind"] = to_string(cert.kind);
  j["length"] = cert.walk.length();
  j["vertices"] = cert.walk.vertex_union().size();
  if (cert.walk.r == 3 && kind == WalkKind::kCycle) {
    RGraph complex = cert.walk.complex();
    j["euler_characteristic"] = euler_characteristic(complex);
    const bool partite = three_partition(complex).has_value();
    j["three_partite"] = partite;
    try {
      j["surface"] = to_string(classify_surface(cert.walk));
    } catch (const InputError& e) {
      j["surface"] = nullptr;
      j["surface_note"] = e.what();
    }
    if (partite) j["parity_surface"] = to_string(parity_surface(cert.walk.length()));
  }
  if (!cfg.input.empty()) {
    RGraph host = load_input_hypergraph(cfg);
    j["host_ok"] = validate_face_cert(cert, host).ok();
  }
  emit(cfg, j.dump(1) + "\n", out);
  return kExitFound;
}

// ---- constructions

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  auto graph_text = [&](const GraphData& data) {
    std::ostringstream s;
    if (cfg.json_graph)
      write_graph_json(s, data);
    else
      write_edge_list(s, data);
    return s.str();
  };
  if (cfg.target == "hypercube") {
    emit(cfg, graph_text(graph_data(hypercube_colored(cfg.m))), out);
    return kExitFound;
  }
  if (cfg.target == "girth") {
    if (cfg.n == 0) throw InputError("--n is required");
    auto res = random_high_girth_graph(cfg.n, cfg.ell, cfg.seed);
    emit(cfg, graph_text(graph_data(res.graph)), out);
    if (!cfg.log.empty()) write_file(cfg.log, deletion_log_json(res, cfg.n, cfg.ell, cfg.seed));
    return kExitFound;
  }
  if (cfg.target == "3graph") {
    if (cfg.n == 0) throw InputError("--n is required");
    auto res = random_short_cycle_free_3graph(cfg.n, cfg.alpha, cfg.seed, cfg.subset_cap);
    std::ostringstream s;
    if (cfg.json_graph)
      s << hypergraph_to_json(res.graph);
    else
      write_hyperedge_list(s, res.graph);
    emit(cfg, s.str(), out);
    if (!cfg.log.empty()) write_file(cfg.log, deletion_log_json(res, cfg.seed));
    return kExitFound;
  }
  throw InputError("unknown construction '" + cfg.target + "'");
}

// ---- Monte Carlo

SamplingOptions sampling_options(const RunConfig& cfg) {
  SamplingOptions s;
  s.p = cfg.p;
  s.p_c = cfg.p_c;
  s.lambda = cfg.lambda;
  s.trials = cfg.trials;
  s.seed = cfg.seed;
  s.threads = cfg.threads;
  return s;
}

int reports_exit(const std::vector<TrialReport>& reports) {
  for (const auto& r : reports)
    if (r.asserted() && !r.within_bound) return kExitNone;
  return kExitFound;
}

int cmd_mc(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string& estimator = cfg.target;
  if (estimator == "chernoff") {
    auto c = check_chernoff_lower_tail(cfg.n ? cfg.n : 16, cfg.p, cfg.trials, cfg.seed, cfg.threads);
    emit(cfg, chernoff_csv({c}), out);
    return c.ok ? kExitFound : kExitNone;
  }
  if (estimator == "inequalities") {
    InequalityGrid grid;
    grid.points = cfg.points;
    auto checks = numeric_inequality_suite(grid);
    emit(cfg, inequalities_csv(checks), out);
    for (const auto& c : checks)
      if (!c.ok()) return kExitNone;
    return kExitFound;
  }
  std::vector<TrialReport> reports;
  if (estimator == "neighborhood") {
    reports.push_back(
        estimate_neighborhood_sampling(random_bipartite_instance(cfg.a, cfg.b, cfg.degree, cfg.seed), sampling_options(cfg)));
  } else if (estimator == "colored") {
    auto inst = properly_colored(random_bipartite_instance(cfg.a, cfg.b, cfg.degree, cfg.seed));
    reports.push_back(estimate_colored_sampling(inst, sampling_options(cfg)));
  } else if (estimator == "master") {
    ColoredGraph g = cfg.input.empty() ? greedy_proper_coloring(complete_graph(12)) : load_colored(cfg, err);
    MasterOptions opt;
    opt.sampling = sampling_options(cfg);
    opt.alpha = cfg.alpha;
    for (Vertex v = 0; v < cfg.b_size && v < g.num_vertices(); ++v) opt.b.push_back(v);
    reports.push_back(estimate_master(g, opt));
  } else if (estimator == "reach") {
    ColoredGraph g = cfg.input.empty() ? greedy_proper_coloring(complete_graph(8)) : load_colored(cfg, err);
    ReachOptions opt;
    opt.sampling = sampling_options(cfg);
    opt.tau = cfg.tau;
    opt.ell = cfg.ell;
    reports.push_back(estimate_reach(g, opt));
  } else if (estimator == "reach-faces") {
    RGraph g = cfg.input.empty() ? complete_rgraph(9, 3) : load_input_hypergraph(cfg);
    ReachOptions opt;
    opt.sampling = sampling_options(cfg);
    opt.tau = cfg.tau;
    opt.ell = cfg.ell;
    reports.push_back(estimate_reach(g, opt));
  } else {
    throw InputError("unknown estimator '" + estimator + "'");
  }
  emit(cfg, reports_csv(reports), out);
  if (!cfg.summary.empty()) write_file(cfg.summary, reports_json(reports));
  for (const auto& r : reports)
    if (!r.hypotheses_ok) err << "note: " << r.lemma << " outside its hypotheses (" << r.hypothesis_note << ")\n";
  return reports_exit(reports);
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  if (cfg.target == "mc-trends") {
    emit(cfg, mc_trends_csv(cfg.seed), out);
    return kExitFound;
  }
  if (cfg.target == "acceptance-primary") {
    AcceptanceOptions opt;
    opt.seed = cfg.seed;
    opt.only = cfg.only;
    if (cfg.inject == "surface-parity")
      opt.classifier = flipped_surface_classifier;
    else if (!cfg.inject.empty())
      throw InputError("unknown fault '" + cfg.inject + "'");
    auto results = run_acceptance(opt);
    emit(cfg, acceptance_csv(results), out);
    for (const auto& r : results)
      if (!r.pass) return kExitNone;
    return kExitFound;
  }
  throw InputError("unknown suite '" + cfg.target + "'");
}

}  // namespace

std::string mc_trends_csv(std::uint64_t seed) {
  std::vector<TrialReport> reports;
  SamplingOptions base;
  base.seed = seed;
  base.trials = 2000;
  auto inst = random_bipartite_instance(400, 2000, 2, seed);
  for (double lambda : {1.5, 2.0, 3.0, 4.0}) {
    SamplingOptions s = base;
    s.lambda = lambda;
    reports.push_back(estimate_neighborhood_sampling(inst, s));
  }
  auto colored = properly_colored(random_bipartite_instance(100, 300, 3, seed));
  for (double p_c : {0.25, 0.5, 1.0}) {
    SamplingOptions s = base;
    s.p_c = p_c;
    reports.push_back(estimate_colored_sampling(colored, s));
  }
  auto k12 = greedy_proper_coloring(complete_graph(12));
  for (double lambda : {1.0, 2.0, 3.0}) {
    MasterOptions opt;
    opt.sampling = base;
    opt.sampling.p = opt.sampling.p_c = 0.3;
    opt.sampling.lambda = lambda;
    opt.b = {0, 1, 2, 3, 4};
    reports.push_back(estimate_master(k12, opt));
  }
  auto c30 = ColoredGraph::rainbow(cycle_graph(30));
  for (double p : {0.2, 0.5, 0.8, 1.0}) {
    ReachOptions opt;
    opt.sampling = base;
    opt.sampling.trials = 1000;
    opt.sampling.p = p;
    opt.sampling.p_c = 1;
    reports.push_back(estimate_reach(c30, opt));
  }
  return reports_csv(reports);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust subdivision and higher-order cycle toolkit"};
  app.name(args.empty() ? "rsub" : args[0]);
  app.require_subcommand(1);
  RunConfig cfg;

  auto io = [&](CLI::App* s) {
    s->add_option("-i,--input", cfg.input, "input graph or hypergraph file");
    s->add_option("-o,--output", cfg.output, "artifact path (default: standard output)");
  };
  auto seeded = [&](CLI::App* s) { s->add_option("--seed", cfg.seed, "random seed")->capture_default_str(); };
  auto sampling = [&](CLI::App* s) {
    seeded(s);
    s->add_option("--p", cfg.p, "vertex sampling probability")->capture_default_str();
    s->add_option("--pc", cfg.p_c, "color sampling probability")->capture_default_str();
    s->add_option("--lambda", cfg.lambda, "tail parameter")->capture_default_str();
    s->add_option("--tau", cfg.tau, "reach exponent")->capture_default_str();
    s->add_option("--retries", cfg.retries, "retry budget")->capture_default_str();
    s->add_option("--rounds", cfg.rounds, "sprinkling rounds")->capture_default_str();
    s->add_option("--parts", cfg.parts, "partition size (0: automatic)");
    s->add_option("--budget", cfg.budget, "node budget for exhaustive stages")->capture_default_str();
    s->add_flag("--no-extract", cfg.no_extract, "skip alpha-maximal extraction");
    s->add_flag("--allow-improper", cfg.allow_improper, "accept improper colorings with a warning");
  };
  const auto modes_exact_peel = CLI::IsMember({"exact", "peel"});

  auto* extract = app.add_subcommand("extract", "alpha-maximal subgraph of a graph");
  io(extract);
  extract->add_option("--alpha", cfg.alpha)->capture_default_str();
  cfg.mode = "exact";
  extract->add_option("--mode", cfg.mode, "exact or peel")->check(modes_exact_peel)->capture_default_str();

  auto* rcycle = app.add_subcommand("rainbow-cycle", "rainbow cycle in a properly colored graph");
  io(rcycle);
  sampling(rcycle);
  rcycle->add_option("--ell", cfg.ell, "path-length budget")->capture_default_str();
  rcycle->add_option("--mode", cfg.mode, "sampled or exact")->check(CLI::IsMember({"sampled", "exact"}));
  rcycle->add_option("--max-len", cfg.max_len, "longest cycle for exact mode (0: n)");

  auto* rsub_cmd = app.add_subcommand("rainbow-subdivision", "rainbow 1-subdivision of K_t");
  io(rsub_cmd);
  sampling(rsub_cmd);
  rsub_cmd->add_option("--t", cfg.t)->capture_default_str();
  rsub_cmd->add_option("--ell", cfg.ell, "path-length budget")->capture_default_str();

  auto* large = app.add_subcommand("large-subdivision", "K_t with every edge subdivided --ell times");
  io(large);
  sampling(large);
  large->add_option("--t", cfg.t)->capture_default_str();
  large->add_option("--ell", cfg.ell, "internal vertices per path")->capture_default_str();
  large->add_flag("--plain", cfg.plain, "ignore colors");

  auto* one = app.add_subcommand("one-subdivision", "1-subdivision of K_t in an uncolored graph");
  io(one);
  one->add_option("--t", cfg.t)->capture_default_str();

  auto* validate = app.add_subcommand("validate", "re-check a certificate against its host");
  io(validate);
  validate->add_option("--cert", cfg.cert, "certificate document")->required();

  auto* hextract = app.add_subcommand("hextract", "alpha-maximal subhypergraph");
  io(hextract);
  hextract->add_option("--alpha", cfg.alpha)->capture_default_str();
  hextract->add_option("--mode", cfg.mode, "exact or peel")->check(modes_exact_peel);

  auto* hverify = app.add_subcommand("hverify", "check the alpha-maximal r-graph properties");
  io(hverify);
  seeded(hverify);
  hverify->add_option("--alpha", cfg.alpha)->capture_default_str();

  auto* hcycle = app.add_subcommand("hcycle", "higher-order cycle of a given length");
  io(hcycle);
  seeded(hcycle);
  hcycle->add_option("--ell", cfg.ell, "cycle length")->capture_default_str();
  hcycle->add_option("--mode", cfg.mode, "exact or pipeline")->check(CLI::IsMember({"exact", "pipeline"}));
  hcycle->add_option("--retries", cfg.retries)->capture_default_str();
  hcycle->add_option("--alpha", cfg.alpha, "pipeline extraction exponent")->capture_default_str();
  hcycle->add_option("--parts", cfg.parts, "pipeline partition size");
  hcycle->add_option("--budget", cfg.budget, "exact search node budget")->capture_default_str();
  hcycle->add_option("--threads", cfg.threads);
  hcycle->add_flag("--surface", cfg.surface, "require a cylinder or Moebius complex");

  auto* classify = app.add_subcommand("classify", "classify a face-walk certificate");
  io(classify);
  classify->add_option("cert,--cert", cfg.cert, "face-walk document")->required();

  auto* construct = app.add_subcommand("construct", "explicit constructions: hypercube, girth, 3graph");
  construct->add_option("kind", cfg.target)->required()->check(CLI::IsMember({"hypercube", "girth", "3graph"}));
  construct->add_option("-o,--output", cfg.output);
  seeded(construct);
  construct->add_option("--m", cfg.m, "hypercube dimension")->capture_default_str();
  construct->add_option("--n", cfg.n, "vertex count");
  construct->add_option("--ell", cfg.ell)->capture_default_str();
  construct->add_option("--alpha", cfg.alpha)->capture_default_str();
  construct->add_option("--subset-cap", cfg.subset_cap)->capture_default_str();
  construct->add_option("--log", cfg.log, "deletion log document");
  construct->add_flag("--json", cfg.json_graph, "write the structured graph document");

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimators");
  mc->add_option("estimator", cfg.target)
      ->required()
      ->check(CLI::IsMember({"chernoff", "inequalities", "neighborhood", "colored", "master", "reach", "reach-faces"}));
  io(mc);
  sampling(mc);
  cfg.trials = 10'000;
  mc->add_option("--trials", cfg.trials)->capture_default_str();
  mc->add_option("--ell", cfg.ell)->capture_default_str();
  mc->add_option("--alpha", cfg.alpha)->capture_default_str();
  mc->add_option("--n", cfg.n, "Bernoulli count for chernoff");
  mc->add_option("--a", cfg.a, "A side size")->capture_default_str();
  mc->add_option("--b", cfg.b, "B side size")->capture_default_str();
  mc->add_option("--degree", cfg.degree, "A side degree")->capture_default_str();
  mc->add_option("--b-size", cfg.b_size, "sampled set size for master")->capture_default_str();
  mc->add_option("--points", cfg.points, "inequality grid points per axis")->capture_default_str();
  mc->add_option("--threads", cfg.threads);
  mc->add_option("--summary", cfg.summary, "structured summary document");

  auto* report = app.add_subcommand("report", "run a named suite: acceptance-primary or mc-trends");
  report->add_option("suite", cfg.target)->required()->check(CLI::IsMember({"acceptance-primary", "mc-trends"}));
  report->add_option("-o,--output", cfg.output);
  seeded(report);
  report->add_option("--only", cfg.only, "criterion ids");
  report->add_option("--inject", cfg.inject, "fault to inject (surface-parity)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("rsub");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitFound : kExitInputError;
  }

  try {
    if (extract->parsed()) return cmd_extract(cfg, out);
    if (rcycle->parsed()) return cmd_rainbow_cycle(cfg, out, err);
    if (rsub_cmd->parsed()) return cmd_rainbow_subdivision(cfg, out, err);
    if (large->parsed()) return cmd_large_subdivision(cfg, out, err);
    if (one->parsed()) return cmd_one_subdivision(cfg, out, err);
    if (validate->parsed()) return cmd_validate(cfg, out);
    if (hextract->parsed()) return cmd_hextract(cfg, out);
    if (hverify->parsed()) return cmd_hverify(cfg, out);
    if (hcycle->parsed()) return cmd_hcycle(cfg, out, err);
    if (classify->parsed()) return cmd_classify(cfg, out);
    if (construct->parsed()) return cmd_construct(cfg, out);
    if (mc->parsed()) return cmd_mc(cfg, out, err);
    if (report->parsed()) return cmd_report(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << "\n";
  } catch (const SizeError& e) {
    err << "error: too large: " << e.what() << "\n";
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace rsub::tools
