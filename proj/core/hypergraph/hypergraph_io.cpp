#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rsub/errors.hpp"
#include "rsub/hypergraph.hpp"
#include "rsub/status.hpp"

namespace rsub {

RGraph read_hyperedge_list(std::istream& in) {
  std::optional<std::size_t> r;
  std::vector<HyperEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream comment(line.substr(hash + 1));
      std::string key;
      std::size_t value = 0;
      if (comment >> key >> value && key == "uniformity") {
        if (r && *r != value) throw InputError("uniformity header conflicts with the edges");
        r = value;
      }
      line.resize(hash);
    }
    std::istringstream ls(line);
    HyperEdge e;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        unsigned long v = std::stoul(tok, &used);
        if (used != tok.size() || v > 0xffffffffUL) throw InputError("");
        e.push_back(static_cast<Vertex>(v));
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": vertex ids must be non-negative integers");
      }
    }
    if (e.empty()) continue;
    if (r && *r != e.size()) throw InputError("line " + std::to_string(line_no) + ": edge size differs from uniformity");
    r = e.size();
    edges.push_back(std::move(e));
  }
  if (!r) throw InputError("hyperedge list is empty and has no uniformity header");
  return RGraph(*r, std::move(edges));
}

void write_hyperedge_list(std::ostream& out, const RGraph& g) {
  out << "# uniformity " << g.r() << '\n';
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

std::string hypergraph_to_json(const RGraph& g) {
  nlohmann::json j;
  j["format"] = "rsub-hypergraph";
  j["version"] = 1;
  j["r"] = g.r();
  j["edges"] = g.edges();
  return j.dump(1) + "\n";
}

RGraph hypergraph_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    if (j.contains("format") && j["format"] != "rsub-hypergraph") throw InputError("not an rsub-hypergraph document");
    return RGraph(j.at("r").get<std::size_t>(), j.at("edges").get<std::vector<HyperEdge>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed hypergraph document: ") + e.what());
  }
}

RGraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return hypergraph_from_json(text);
  std::istringstream is(text);
  return read_hyperedge_list(is);
}

void save_hypergraph(const std::string& path, const RGraph& g, bool json) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  if (json) {
    out << hypergraph_to_json(g);
  } else {
    write_hyperedge_list(out, g);
  }
}

std::string rgraph_digest(const RGraph& g) {
  std::ostringstream out;
  write_hyperedge_list(out, g);
  return fnv1a64_hex(out.str());
}

}  // namespace rsub
