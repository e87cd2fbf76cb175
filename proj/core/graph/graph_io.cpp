#include "rsub/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "rsub/errors.hpp"
#include "rsub/status.hpp"

namespace rsub {

namespace {

bool parse_uint(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Assigns ids to labels. Integer labels map to themselves unless any label in
// the column is non-integer, in which case ids follow first appearance.
struct LabelMap {
  std::vector<std::string> raw;
  bool all_integer = true;

  void add(const std::string& s) {
    std::uint64_t x;
    if (!parse_uint(s, x) || x > 0xfffffffeULL) all_integer = false;
    raw.push_back(s);
  }

  std::vector<std::uint32_t> assign(std::vector<std::string>& labels) const {
    std::vector<std::uint32_t> ids;
    ids.reserve(raw.size());
    if (all_integer) {
      for (const auto& s : raw) {
        std::uint64_t x = 0;
        parse_uint(s, x);
        ids.push_back(static_cast<std::uint32_t>(x));
      }
      return ids;
    }
    std::map<std::string, std::uint32_t> index;
    for (const auto& s : raw) {
      auto [it, fresh] = index.emplace(s, static_cast<std::uint32_t>(labels.size()));
      if (fresh) labels.push_back(s);
      ids.push_back(it->second);
    }
    return ids;
  }
};

void parse_header(const std::string& comment, std::size_t& n, bool& has_n) {
  std::istringstream ss(comment);
  std::string word;
  while (ss >> word) {
    if (word == "vertices") {
      std::string v;
      std::uint64_t x;
      if (ss >> v && parse_uint(v, x)) {
        n = static_cast<std::size_t>(x);
        has_n = true;
      }
    }
  }
}

}  // namespace

SimpleGraph GraphData::to_simple() const { return SimpleGraph(n, edges); }

ColoredGraph GraphData::to_colored(bool require_proper) const {
  if (!colored) throw InputError("graph file carries no edge colors");
  return ColoredGraph(n, edges, colors, require_proper);
}

GraphData graph_data(const SimpleGraph& g) {
  GraphData d;
  d.n = g.num_vertices();
  d.edges = g.edges();
  return d;
}

GraphData graph_data(const ColoredGraph& g) {
  GraphData d = graph_data(g.graph());
  d.colors = g.colors();
  d.colored = true;
  return d;
}

GraphData read_edge_list(std::istream& in) {
  GraphData d;
  bool has_n = false;
  std::size_t header_n = 0;
  LabelMap vertices, colors;
  std::size_t with_color = 0, without_color = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      if (line_no == 1 || !has_n) parse_header(line.substr(hash + 1), header_n, has_n);
      line.erase(hash);
    }
    std::istringstream ss(line);
    std::vector<std::string> tok;
    std::string t;
    while (ss >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 2 && tok.size() != 3) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v [color]'");
    }
    vertices.add(tok[0]);
    vertices.add(tok[1]);
    if (tok.size() == 3) {
      colors.add(tok[2]);
      ++with_color;
    } else {
      ++without_color;
    }
  }
  if (with_color > 0 && without_color > 0) throw InputError("either every edge or no edge must carry a color");
  auto vid = vertices.assign(d.vertex_labels);
  std::size_t n = 0;
  for (auto v : vid) n = std::max<std::size_t>(n, static_cast<std::size_t>(v) + 1);
  if (!d.vertex_labels.empty()) n = d.vertex_labels.size();
  if (has_n) {
    if (header_n < n) throw InputError("header vertex count smaller than the largest vertex id");
    n = header_n;
  }
  d.n = n;
  for (std::size_t i = 0; i + 1 < vid.size(); i += 2) d.edges.push_back({vid[i], vid[i + 1]});
  if (with_color > 0) {
    d.colored = true;
    auto cid = colors.assign(d.color_labels);
    d.colors.assign(cid.begin(), cid.end());
  }
  // Validate now so that malformed files fail at load time.
  SimpleGraph check(d.n, d.edges);
  (void)check;
  return d;
}

void write_edge_list(std::ostream& out, const GraphData& g) {
  std::vector<std::size_t> order(g.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto key = [&](std::size_t i) {
    Edge e = g.edges[i];
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  out << "# vertices " << g.n;
  if (g.colored) {
    std::size_t k = 0;
    for (Color c : g.colors) k = std::max<std::size_t>(k, static_cast<std::size_t>(c) + 1);
    out << " colors " << k;
  }
  out << '\n';
  for (std::size_t i : order) {
    Edge e = key(i);
    out << e.first << ' ' << e.second;
    if (g.colored) out << ' ' << g.colors[i];
    out << '\n';
  }
}

GraphData read_graph_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph document: ") + e.what());
  }
  try {
    GraphData d;
    if (j.contains("format") && j["format"] != "rsub-graph") throw InputError("not an rsub-graph document");
    d.n = j.at("n").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge entries must be [u, v] pairs");
      d.edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    if (j.contains("colors")) {
      d.colors = j["colors"].get<std::vector<Color>>();
      if (d.colors.size() != d.edges.size()) throw InputError("colors and edges differ in length");
      d.colored = true;
    }
    if (j.contains("vertex_labels")) d.vertex_labels = j["vertex_labels"].get<std::vector<std::string>>();
    SimpleGraph check(d.n, d.edges);
    (void)check;
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph document: ") + e.what());
  }
}

void write_graph_json(std::ostream& out, const GraphData& g) {
  nlohmann::json j;
  j["format"] = "rsub-graph";
  j["version"] = 1;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
  if (g.colored) j["colors"] = g.colors;
  if (!g.vertex_labels.empty()) j["vertex_labels"] = g.vertex_labels;
  out << j.dump(1) << '\n';
}

GraphData load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  char c = 0;
  while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {
  }
  in.clear();
  in.seekg(0);
  return c == '{' ? read_graph_json(in) : read_edge_list(in);
}

void save_graph(const std::string& path, const GraphData& g, bool json) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  if (json) {
    write_graph_json(out, g);
  } else {
    write_edge_list(out, g);
  }
}

namespace {

std::string digest_of(const GraphData& data) {
  std::ostringstream out;
  write_edge_list(out, data);
  return fnv1a64_hex(out.str());
}

}  // namespace

std::string graph_digest(const SimpleGraph& g) { return digest_of(graph_data(g)); }
std::string graph_digest(const ColoredGraph& g) { return digest_of(graph_data(g)); }

}  // namespace rsub
