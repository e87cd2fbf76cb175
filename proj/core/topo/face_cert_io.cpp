#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rsub/errors.hpp"
#include "rsub/topo.hpp"

namespace rsub {

std::string face_cert_to_json(const FaceWalk& walk, const RGraph* host) {
  nlohmann::json j;
  j["format"] = "rsub-face-walk";
  j["version"] = 1;
  j["r"] = walk.r;
  j["kind"] = to_string(classify_walk(walk));
  j["faces"] = walk.faces;
  j["host_digest"] = host ? rgraph_digest(*host) : "";
  return j.dump(1) + "\n";
}

FaceCert face_cert_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    if (j.value("format", "") != "rsub-face-walk") throw InputError("not an rsub-face-walk document");
    FaceCert cert;
    cert.walk.r = j.at("r").get<std::size_t>();
    for (auto& f : j.at("faces").get<std::vector<std::vector<Vertex>>>()) cert.walk.faces.push_back(make_face(std::move(f)));
    cert.kind = walk_kind_from_string(j.at("kind").get<std::string>());
    cert.host_digest = j.value("host_digest", "");
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed face-walk document: ") + e.what());
  }
}

FaceCert load_face_cert(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return face_cert_from_json(buf.str());
}

FaceCertCheck validate_face_cert(const FaceCert& cert, const RGraph& host) {
  FaceCertCheck check;
  try {
    check_walk_shape(cert.walk);
    check.shape_ok = true;
  } catch (const InputError&) {
    return check;
  }
  check.kind_ok = classify_walk(cert.walk) == cert.kind;
  check.digest_ok = cert.host_digest.empty() || cert.host_digest == rgraph_digest(host);
  check.host_ok = walk_in_host(cert.walk, host);
  return check;
}

}  // namespace rsub
