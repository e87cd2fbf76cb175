#include <json.hpp>

#include "rsub/errors.hpp"
#include "rsub/graph_io.hpp"
#include "rsub/rainbow.hpp"

namespace rsub {

std::string rainbow_cycle_to_json(const RainbowCycle& cycle, const std::string& host_digest, std::uint64_t seed) {
  nlohmann::json j;
  j["format"] = "rsub-rainbow-cycle";
  j["version"] = 1;
  j["vertices"] = cycle.vertices;
  j["colors"] = cycle.colors;
  j["host_digest"] = host_digest;
  j["seed"] = seed;
  return j.dump(1) + "\n";
}

std::string subdivision_to_json(const SubdivisionCert& cert, const std::string& host_digest, std::uint64_t seed) {
  nlohmann::json j;
  j["format"] = "rsub-subdivision";
  j["version"] = 1;
  j["t"] = cert.t();
  j["rainbow"] = cert.rainbow;
  j["branch"] = cert.branch;
  j["paths"] = cert.paths;
  if (cert.path_length) j["path_length"] = *cert.path_length;
  j["host_digest"] = host_digest;
  j["seed"] = seed;
  return j.dump(1) + "\n";
}

GraphCert graph_cert_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    const std::string format = j.value("format", "");
    if (j.value("version", 0) != 1) throw InputError("unsupported certificate version");
    GraphCert cert;
    cert.host_digest = j.value("host_digest", "");
    cert.seed = j.value("seed", std::uint64_t{0});
    if (format == "rsub-rainbow-cycle") {
      cert.kind = GraphCertKind::kRainbowCycle;
      cert.cycle.vertices = j.at("vertices").get<std::vector<Vertex>>();
      cert.cycle.colors = j.at("colors").get<std::vector<Color>>();
    } else if (format == "rsub-subdivision") {
      cert.kind = GraphCertKind::kSubdivision;
      auto& s = cert.subdivision;
      s.branch = j.at("branch").get<std::vector<Vertex>>();
      s.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
      s.rainbow = j.at("rainbow").get<bool>();
      if (j.contains("path_length")) s.path_length = j["path_length"].get<std::size_t>();
      if (j.at("t").get<std::size_t>() != s.t()) throw InputError("t does not match the branch list");
    } else {
      throw InputError("unknown certificate format '" + format + "'");
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

GraphCertCheck validate_graph_cert(const GraphCert& cert, const ColoredGraph& host) {
  GraphCertCheck check;
  check.digest_ok = cert.host_digest.empty() || cert.host_digest == graph_digest(host);
  check.structure_ok = cert.kind == GraphCertKind::kRainbowCycle
                           ? validate_rainbow_cycle(host, cert.cycle)
                           : validate_subdivision(host, cert.subdivision, cert.subdivision.rainbow);
  return check;
}

GraphCertCheck validate_graph_cert(const GraphCert& cert, const SimpleGraph& host) {
  GraphCertCheck check;
  check.digest_ok = cert.host_digest.empty() || cert.host_digest == graph_digest(host);
  check.structure_ok = cert.kind == GraphCertKind::kSubdivision && !cert.subdivision.rainbow &&
                       validate_subdivision(host, cert.subdivision);
  return check;
}

}  // namespace rsub
