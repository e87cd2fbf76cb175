#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "rsub/errors.hpp"
#include "rsub/topo.hpp"

namespace rsub {

namespace {

Vertex extra_vertex(const HyperEdge& e, const Face& f) {
  for (Vertex v : e)
    if (!std::binary_search(f.begin(), f.end(), v)) return v;
  throw PreconditionError("face not contained in edge");
}

Face without(const HyperEdge& e, Vertex v) {
  Face f;
  for (Vertex u : e)
    if (u != v) f.push_back(u);
  return f;
}

bool disjoint(const Face& a, const Face& b) {
  for (Vertex v : a)
    if (std::binary_search(b.begin(), b.end(), v)) return false;
  return true;
}

bool valid_proper_path(const FaceWalk& w, const RGraph& g) {
  return walk_in_host(w, g) && classify_walk(w) == WalkKind::kProperPath;
}

// Depth-first search over proper paths of the given length starting and
// ending in F.
std::optional<FaceWalk> search_path(const RGraph& g, const std::vector<char>& in_f, std::size_t length,
                                    std::uint64_t budget) {
  std::uint64_t nodes = 0;
  FaceWalk walk{g.r(), {}};
  std::set<Vertex> used;
  std::function<bool(std::size_t)> extend = [&](std::size_t fi) -> bool {
    if (++nodes > budget) return false;
    const Face& cur = g.faces()[fi];
    const Face& start = walk.faces.front();
    std::size_t depth = walk.length();
    if (depth == length) return in_f[fi] && disjoint(start, cur);
    std::size_t start_left = 0;
    for (Vertex v : cur) start_left += std::binary_search(start.begin(), start.end(), v);
    if (start_left > length - depth) return false;
    for (std::size_t ej : g.edges_of_face(fi)) {
      const auto& e = g.edges()[ej];
      Vertex y = extra_vertex(e, cur);
      if (used.count(y)) continue;
      for (Vertex x : cur) {
        Face next = without(e, x);
        std::size_t ni = *g.face_index(next);
        walk.faces.push_back(next);
        used.insert(y);
        if (extend(ni)) return true;
        used.erase(y);
        walk.faces.pop_back();
        if (nodes > budget) return false;
      }
    }
    return false;
  };
  for (std::size_t fi = 0; fi < g.num_faces() && nodes <= budget; ++fi) {
    if (!in_f[fi]) continue;
    walk.faces = {g.faces()[fi]};
    used = std::set<Vertex>(g.faces()[fi].begin(), g.faces()[fi].end());
    if (extend(fi)) return walk;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Vertex>> tight_path_greedy(const RGraph& g, const std::vector<Vertex>& start,
                                                     std::size_t length, Rng* rng) {
  if (start.size() + 1 != g.r() || !g.has_face(make_face(start)))
    throw InputError("start is not a face of the hypergraph");
  std::vector<Vertex> seq = start;
  std::set<Vertex> used(start.begin(), start.end());
  for (std::size_t step = 0; step < length; ++step) {
    Face window = make_face(std::vector<Vertex>(seq.end() - static_cast<std::ptrdiff_t>(g.r() - 1), seq.end()));
    auto fi = g.face_index(window);
    if (!fi) return std::nullopt;
    std::vector<Vertex> options;
    for (std::size_t ej : g.edges_of_face(*fi)) {
      Vertex y = extra_vertex(g.edges()[ej], window);
      if (!used.count(y)) options.push_back(y);
    }
    if (options.empty()) return std::nullopt;
    std::sort(options.begin(), options.end());
    Vertex pick = rng ? options[rng->below(options.size())] : options.front();
    seq.push_back(pick);
    used.insert(pick);
  }
  return seq;
}

RGraph face_core(const RGraph& g, std::size_t k) {
  std::vector<std::size_t> degree(g.num_faces());
  std::vector<char> alive(g.num_edges(), 1);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < g.num_faces(); ++i) {
    degree[i] = g.face_degree(i);
    if (degree[i] < k) queue.push_back(i);
  }
  while (!queue.empty()) {
    std::size_t f = queue.front();
    queue.pop_front();
    for (std::size_t ej : g.edges_of_face(f)) {
      if (!alive[ej]) continue;
      alive[ej] = 0;
      for (std::size_t h : g.faces_of_edge(ej))
        if (degree[h]-- == k) queue.push_back(h);
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < g.num_edges(); ++j)
    if (alive[j]) keep.push_back(j);
  return g.sub(keep);
}

FacePathResult path_between_face_set(const RGraph& g, const FaceSet& f, std::size_t length,
                                     std::uint64_t search_budget) {
  const std::size_t r = g.r();
  if (r < 3) throw PreconditionError("paths between face sets need r >= 3");
  if (length <= r) throw PreconditionError("path length must exceed r");
  FacePathResult result;
  result.method = "none";
  std::vector<char> in_f(g.num_faces(), 0);
  std::size_t f_size = 0;
  for (const auto& face : f) {
    auto i = g.face_index(face);
    if (!i) throw InputError("face set is not contained in the shadow");
    f_size += !in_f[*i];
    in_f[*i] = 1;
  }
  if (g.num_edges() == 0 || f_size == 0) return result;
  const double d = static_cast<double>(g.min_face_degree());
  result.required_size = 2.0 * static_cast<double>(r * length) * static_cast<double>(g.num_faces()) / d;
  result.within_guarantee = static_cast<double>(f_size) >= result.required_size;
  auto member = [&](const Face& face) {
    auto i = g.face_index(face);
    return i && in_f[*i];
  };

  std::vector<std::size_t> exactly_one, several;
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    std::size_t c = 0;
    for (std::size_t h : g.faces_of_edge(j)) c += in_f[h];
    if (c == 1) exactly_one.push_back(j);
    if (c >= 2) several.push_back(j);
  }
  std::vector<int> order = exactly_one.size() >= several.size() ? std::vector<int>{1, 2} : std::vector<int>{2, 1};
  for (int which : order) {
    RGraph h = face_core(g.sub(which == 1 ? exactly_one : several), length);
    if (h.num_edges() == 0) continue;
    if (which == 1) {
      const Face* start = nullptr;
      for (const auto& face : h.faces())
        if (member(face)) {
          start = &face;
          break;
        }
      if (!start) continue;
      auto seq = tight_path_greedy(h, *start, length - 1);
      if (!seq) continue;
      FaceWalk w = tight_walk(*seq, r);
      const HyperEdge last_edge = make_face(std::vector<Vertex>(seq->end() - static_cast<std::ptrdiff_t>(r), seq->end()));
      const Face& before = w.faces[length - 2];
      std::optional<Face> turn;
      for (const auto& face : faces_of(last_edge))
        if (face != before && !member(face)) {
          turn = face;
          break;
        }
      if (!turn) continue;
      std::set<Vertex> used(seq->begin(), seq->end());
      std::optional<HyperEdge> closing;
      for (std::size_t ej : h.edges_of_face(*h.face_index(*turn))) {
        Vertex y = extra_vertex(h.edges()[ej], *turn);
        if (!used.count(y)) {
          closing = h.edges()[ej];
          break;
        }
      }
      if (!closing) continue;
      std::optional<Face> end;
      for (const auto& face : faces_of(*closing))
        if (member(face)) end = face;
      if (!end) continue;
      w.faces.back() = *turn;
      w.faces.push_back(*end);
      if (valid_proper_path(w, g)) {
        result.path = w;
        result.method = "case1";
        return result;
      }
    } else {
      auto seq = tight_path_greedy(h, h.faces().front(), length);
      if (!seq) continue;
      FaceWalk w = tight_walk(*seq, r);
      const HyperEdge first_edge = make_face(std::vector<Vertex>(seq->begin(), seq->begin() + static_cast<std::ptrdiff_t>(r)));
      const HyperEdge last_edge = make_face(std::vector<Vertex>(seq->end() - static_cast<std::ptrdiff_t>(r), seq->end()));
      std::optional<Face> head, tail;
      for (const auto& face : faces_of(first_edge))
        if (!head && face != w.faces[1] && member(face)) head = face;
      for (const auto& face : faces_of(last_edge))
        if (!tail && face != w.faces[length - 1] && member(face)) tail = face;
      if (!head || !tail) continue;
      w.faces.front() = *head;
      w.faces.back() = *tail;
      if (valid_proper_path(w, g)) {
        result.path = w;
        result.method = "case2";
        return result;
      }
    }
  }
  if (auto w = search_path(g, in_f, length, search_budget)) {
    result.path = w;
    result.method = "search";
  }
  return result;
}

FanResult fan_paths(const RGraph& g, const Face& f0_in, std::size_t d) {
  const std::size_t r = g.r();
  Face f0 = make_face(f0_in);
  if (!g.has_face(f0)) throw InputError("start face is not in the shadow");
  if (d <= r) throw PreconditionError("fan construction needs d > r");
  if (g.min_face_degree() < d) throw PreconditionError("some face has degree below d");
  FanResult out;
  std::map<Face, FaceWalk> found;
  std::vector<Vertex> ys;
  std::function<void(std::size_t)> grow = [&](std::size_t i) {
    if (i + 1 == r) {
      ++out.sequences;
      Face end = make_face(ys);
      if (found.count(end)) return;
      FaceWalk w{r, {f0}};
      for (std::size_t k = 1; k < r; ++k) {
        std::vector<Vertex> face(f0.begin() + static_cast<std::ptrdiff_t>(k), f0.end());
        face.insert(face.end(), ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(k));
        w.faces.push_back(make_face(std::move(face)));
      }
      found.emplace(end, std::move(w));
      return;
    }
    std::vector<Vertex> cur(f0.begin() + static_cast<std::ptrdiff_t>(i), f0.end());
    cur.insert(cur.end(), ys.begin(), ys.end());
    Face cf = make_face(cur);
    std::vector<Vertex> options;
    for (std::size_t ej : g.edges_of_face(*g.face_index(cf))) {
      Vertex y = extra_vertex(g.edges()[ej], cf);
      if (!std::binary_search(f0.begin(), f0.begin() + static_cast<std::ptrdiff_t>(i), y)) options.push_back(y);
    }
    std::sort(options.begin(), options.end());
    options.resize(std::min(options.size(), d - i));
    for (Vertex y : options) {
      ys.push_back(y);
      grow(i + 1);
      ys.pop_back();
    }
  };
  grow(0);
  std::map<Vertex, std::size_t> vdeg;
  for (auto& [face, walk] : found) {
    out.faces.push_back(face);
    out.paths.push_back(std::move(walk));
    for (Vertex v : face) out.max_vertex_degree = std::max(out.max_vertex_degree, ++vdeg[v]);
  }
  std::uint64_t num = 1, den = 1;
  for (std::size_t k = 0; k + 1 < r; ++k) {
    num *= d;
    den *= r;
  }
  out.required = static_cast<std::size_t>((num + den - 1) / den);
  out.degree_bound = static_cast<double>(r);
  for (std::size_t k = 0; k + 2 < r; ++k) out.degree_bound *= static_cast<double>(d);
  out.size_ok = out.faces.size() >= out.required;
  out.degree_ok = static_cast<double>(out.max_vertex_degree) <= out.degree_bound;
  return out;
}

namespace {

// Every proper path of length r-1 from f0, keeping the first per endpoint.
std::map<Face, FaceWalk> exhaustive_fan(const RGraph& g, const Face& f0) {
  std::map<Face, FaceWalk> found;
  FaceWalk walk{g.r(), {f0}};
  std::set<Vertex> used(f0.begin(), f0.end());
  std::function<void()> grow = [&]() {
    const Face cur = walk.faces.back();
    if (walk.length() + 1 == g.r()) {
      if (disjoint(cur, f0)) found.emplace(cur, walk);
      return;
    }
    for (std::size_t ej : g.edges_of_face(*g.face_index(cur))) {
      const auto& e = g.edges()[ej];
      Vertex y = extra_vertex(e, cur);
      if (used.count(y)) continue;
      for (Vertex x : cur) {
        if (!std::binary_search(f0.begin(), f0.end(), x)) continue;
        walk.faces.push_back(without(e, x));
        used.insert(y);
        grow();
        used.erase(y);
        walk.faces.pop_back();
      }
    }
  };
  grow();
  return found;
}

}  // namespace

std::vector<ReachLevel> sampled_reach_faces(const RGraph& g, const Face& f0_in, const std::vector<VertexSet>& rounds) {
  Face f0 = make_face(f0_in);
  if (!g.has_face(f0)) throw InputError("start face is not in the shadow");
  std::map<Face, FaceWalk> level;
  const std::size_t min_deg = g.min_face_degree();
  if (min_deg > g.r()) {
    auto fan = fan_paths(g, f0, min_deg);
    for (std::size_t i = 0; i < fan.faces.size(); ++i) level.emplace(fan.faces[i], fan.paths[i]);
  } else {
    level = exhaustive_fan(g, f0);
  }
  std::vector<ReachLevel> out;
  auto emit = [&]() {
    ReachLevel lv;
    for (auto& [face, walk] : level) {
      lv.faces.push_back(face);
      lv.witnesses.push_back(walk);
    }
    out.push_back(std::move(lv));
  };
  emit();
  for (const auto& round : rounds) {
    std::map<Face, FaceWalk> next;
    for (const auto& [face, walk] : level) {
      VertexSet phi = walk.vertex_union();
      for (std::size_t ej : g.edges_of_face(*g.face_index(face))) {
        const auto& e = g.edges()[ej];
        Vertex y = extra_vertex(e, face);
        if (std::binary_search(phi.begin(), phi.end(), y)) continue;
        for (Vertex x : face) {
          if (!std::binary_search(round.begin(), round.end(), x)) continue;
          Face nf = without(e, x);
          if (level.count(nf) || next.count(nf)) continue;
          FaceWalk w = walk;
          w.faces.push_back(nf);
          next.emplace(std::move(nf), std::move(w));
        }
      }
    }
    level = std::move(next);
    emit();
  }
  return out;
}

}  // namespace rsub
