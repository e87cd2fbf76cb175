#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rsub/errors.hpp"
#include "rsub/topo.hpp"

namespace rsub {

namespace {

bool disjoint(const Face& a, const Face& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

std::size_t union_size(const Face& a, const Face& b) {
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) {
      ++common;
      ++i;
      ++j;
    } else if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return a.size() + b.size() - common;
}

bool well_formed(const FaceWalk& w) {
  if (w.r < 2 || w.faces.empty()) return false;
  for (const auto& f : w.faces) {
    if (f.size() != w.r - 1) return false;
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i - 1] >= f[i]) return false;
  }
  for (std::size_t i = 1; i < w.faces.size(); ++i)
    if (union_size(w.faces[i - 1], w.faces[i]) != w.r) return false;
  return true;
}

HyperEdge face_union(const Face& a, const Face& b) {
  HyperEdge e;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(e));
  return e;
}

void require_r3(std::size_t r) {
  if (r != 3) throw UnsupportedError("only 3-uniform complexes are supported");
}

}  // namespace

std::vector<HyperEdge> FaceWalk::edges() const {
  std::vector<HyperEdge> out;
  for (std::size_t i = 1; i < faces.size(); ++i) out.push_back(face_union(faces[i - 1], faces[i]));
  return out;
}

RGraph FaceWalk::complex() const {
  std::set<HyperEdge> distinct;
  for (auto& e : edges()) distinct.insert(std::move(e));
  return RGraph(r, std::vector<HyperEdge>(distinct.begin(), distinct.end()));
}

VertexSet FaceWalk::vertex_union() const {
  std::set<Vertex> s;
  for (const auto& f : faces) s.insert(f.begin(), f.end());
  return VertexSet(s.begin(), s.end());
}

const char* to_string(WalkKind k) {
  switch (k) {
    case WalkKind::kWalk:
      return "walk";
    case WalkKind::kPath:
      return "path";
    case WalkKind::kProperPath:
      return "proper-path";
    case WalkKind::kCycle:
      return "cycle";
    case WalkKind::kClosedWalk:
      return "closed-walk";
  }
  return "unknown";
}

WalkKind walk_kind_from_string(const std::string& s) {
  for (auto k : {WalkKind::kWalk, WalkKind::kPath, WalkKind::kProperPath, WalkKind::kCycle, WalkKind::kClosedWalk})
    if (s == to_string(k)) return k;
  throw InputError("unknown walk kind: " + s);
}

void check_walk_shape(const FaceWalk& w) {
  if (w.r < 2) throw InputError("uniformity must be at least 2");
  if (w.faces.empty()) throw InputError("walk has no faces");
  for (const auto& f : w.faces) {
    if (f.size() != w.r - 1) throw InputError("face has " + std::to_string(f.size()) + " vertices, expected r-1");
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i - 1] >= f[i]) throw InputError("face vertices must be sorted and distinct");
  }
  for (std::size_t i = 1; i < w.faces.size(); ++i)
    if (union_size(w.faces[i - 1], w.faces[i]) != w.r)
      throw InputError("faces " + std::to_string(i - 1) + " and " + std::to_string(i) + " do not span an r-set");
}

WalkKind classify_walk(const FaceWalk& w) {
  check_walk_shape(w);
  const std::size_t len = w.length();
  const std::size_t covered = w.vertex_union().size();
  if (len >= 1 && w.faces.front() == w.faces.back()) {
    if (covered != len) return WalkKind::kClosedWalk;
    for (std::size_t i = 1; i <= len; ++i)
      for (std::size_t j = i + 1; j <= len; ++j)
        if (disjoint(w.faces[i], w.faces[j])) return WalkKind::kCycle;
    return WalkKind::kClosedWalk;
  }
  if (covered != len + w.r - 1) return WalkKind::kWalk;
  return disjoint(w.faces.front(), w.faces.back()) ? WalkKind::kProperPath : WalkKind::kPath;
}

bool walk_in_host(const FaceWalk& w, const RGraph& host) {
  if (w.r != host.r() || !well_formed(w)) return false;
  for (const auto& e : w.edges())
    if (!host.has_edge(e)) return false;
  return true;
}

VertexSet internal_vertices(const FaceWalk& path) {
  VertexSet all = path.vertex_union();
  Face ends = face_union(path.faces.front(), path.faces.back());
  VertexSet out;
  std::set_difference(all.begin(), all.end(), ends.begin(), ends.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> vertex_order(const FaceWalk& path) {
  if (classify_walk(path) != WalkKind::kProperPath)
    throw PreconditionError("vertex order is defined for proper paths only");
  std::map<Vertex, std::size_t> first, last;
  for (std::size_t i = 0; i < path.faces.size(); ++i)
    for (Vertex v : path.faces[i]) {
      first.emplace(v, i);
      last[v] = i;
    }
  std::vector<Vertex> head(path.faces.front().begin(), path.faces.front().end());
  std::sort(head.begin(), head.end(), [&](Vertex a, Vertex b) { return last[a] < last[b]; });
  std::vector<Vertex> tail;
  for (const auto& [v, i] : first)
    if (i > 0) tail.push_back(v);
  std::sort(tail.begin(), tail.end(), [&](Vertex a, Vertex b) { return first[a] < first[b]; });
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

FaceWalk tight_walk(const std::vector<Vertex>& sequence, std::size_t r) {
  if (r < 2 || sequence.size() < r - 1) throw InputError("sequence shorter than a face");
  FaceWalk w{r, {}};
  for (std::size_t i = 0; i + r - 1 <= sequence.size(); ++i)
    w.faces.push_back(make_face(std::vector<Vertex>(sequence.begin() + i, sequence.begin() + i + r - 1)));
  return w;
}

FaceWalk tight_cycle(std::size_t length, std::size_t r) {
  if (r < 2 || length < r) throw InputError("tight cycle needs length >= r");
  FaceWalk w{r, {}};
  for (std::size_t i = 0; i <= length; ++i) {
    std::vector<Vertex> f;
    for (std::size_t k = 0; k + 1 < r; ++k) f.push_back(static_cast<Vertex>((i + k) % length));
    w.faces.push_back(make_face(std::move(f)));
  }
  return w;
}

std::pair<FaceWalk, FaceWalk> split_cycle(const FaceWalk& cycle) {
  if (classify_walk(cycle) != WalkKind::kCycle) throw InputError("not a cycle");
  const std::size_t len = cycle.length();
  std::size_t bi = 0, bj = 0, best = len + 1;
  for (std::size_t i = 1; i <= len; ++i)
    for (std::size_t j = i + 1; j <= len; ++j) {
      if (!disjoint(cycle.faces[i], cycle.faces[j])) continue;
      std::size_t arc = j - i;
      std::size_t imbalance = 2 * arc > len ? 2 * arc - len : len - 2 * arc;
      if (imbalance < best) {
        best = imbalance;
        bi = i;
        bj = j;
      }
    }
  FaceWalk first{cycle.r, std::vector<Face>(cycle.faces.begin() + bi, cycle.faces.begin() + bj + 1)};
  FaceWalk second{cycle.r, std::vector<Face>(cycle.faces.begin() + bj, cycle.faces.end())};
  second.faces.insert(second.faces.end(), cycle.faces.begin() + 1, cycle.faces.begin() + bi + 1);
  return {first, second};
}

FaceWalk canonical_cycle(const FaceWalk& cycle) {
  const std::size_t len = cycle.length();
  if (len == 0 || cycle.faces.front() != cycle.faces.back()) throw InputError("not a closed walk");
  std::vector<Face> base(cycle.faces.begin(), cycle.faces.end() - 1);
  std::vector<Face> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < len; ++s) {
      std::vector<Face> cand(len);
      for (std::size_t k = 0; k < len; ++k) cand[k] = base[dir == 0 ? (s + k) % len : (s + len - k) % len];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  best.push_back(best.front());
  return FaceWalk{cycle.r, std::move(best)};
}

long euler_characteristic(const RGraph& g) {
  require_r3(g.r());
  return static_cast<long>(g.num_edges()) - static_cast<long>(g.num_faces()) + static_cast<long>(g.num_vertices());
}

long euler_characteristic(const FaceWalk& w) {
  require_r3(w.r);
  check_walk_shape(w);
  return euler_characteristic(w.complex());
}

bool is_surface_with_boundary(const RGraph& g) {
  require_r3(g.r());
  if (g.num_edges() == 0) return false;
  bool boundary = false;
  for (std::size_t i = 0; i < g.num_faces(); ++i) {
    if (g.face_degree(i) > 2) return false;
    if (g.face_degree(i) == 1) boundary = true;
  }
  if (!boundary) return false;
  // Triangles connected through shared 1-faces.
  std::vector<char> seen(g.num_edges(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t t = queue.front();
    queue.pop_front();
    for (std::size_t f : g.faces_of_edge(t))
      for (std::size_t u : g.edges_of_face(f))
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          queue.push_back(u);
        }
  }
  if (reached != g.num_edges()) return false;
  // Each vertex link must be connected (a path or a cycle, given degree <= 2).
  std::map<Vertex, std::vector<std::pair<Vertex, Vertex>>> links;
  for (const auto& e : g.edges())
    for (std::size_t k = 0; k < 3; ++k) links[e[k]].push_back({e[(k + 1) % 3], e[(k + 2) % 3]});
  for (const auto& [v, link] : links) {
    std::map<Vertex, Vertex> parent;
    std::function<Vertex(Vertex)> find = [&](Vertex x) {
      auto it = parent.find(x);
      if (it == parent.end()) return parent[x] = x;
      return it->second == x ? x : it->second = find(it->second);
    };
    for (auto [a, b] : link) parent[find(a)] = find(b);
    std::set<Vertex> roots;
    for (auto& [x, _] : parent) roots.insert(find(x));
    if (roots.size() != 1) return false;
  }
  return true;
}

const char* to_string(Surface s) { return s == Surface::kCylinder ? "cylinder" : "moebius"; }

Surface parity_surface(std::size_t length) { return length % 2 == 0 ? Surface::kCylinder : Surface::kMoebius; }

Surface classify_surface(const FaceWalk& cycle) {
  require_r3(cycle.r);
  if (classify_walk(cycle) != WalkKind::kCycle) throw InputError("not a cycle");
  RGraph c = cycle.complex();
  for (std::size_t i = 0; i < c.num_faces(); ++i)
    if (c.face_degree(i) > 2) throw InputError("a 1-face lies in three or more triangles");
  if (!is_surface_with_boundary(c) || euler_characteristic(c) != 0)
    throw InputError("the cycle complex is not a cylinder or a Moebius strip");
  // Orientation of the sorted triangle (a,b,c) induces a->b, b->c, c->a, so
  // relative to the sorted pair, (a,b) and (b,c) get +1 and (a,c) gets -1.
  auto induced = [&](std::size_t t, std::size_t f) {
    const auto& e = c.edges()[t];
    const auto& face = c.faces()[f];
    return (face[0] == e[0] && face[1] == e[2]) ? -1 : 1;
  };
  std::vector<int> sign(c.num_edges(), 0);
  std::deque<std::size_t> queue{0};
  sign[0] = 1;
  while (!queue.empty()) {
    std::size_t t = queue.front();
    queue.pop_front();
    for (std::size_t f : c.faces_of_edge(t)) {
      for (std::size_t u : c.edges_of_face(f)) {
        if (u == t) continue;
        int want = -sign[t] * induced(t, f) * induced(u, f);
        if (sign[u] == 0) {
          sign[u] = want;
          queue.push_back(u);
        } else if (sign[u] != want) {
          return Surface::kMoebius;
        }
      }
    }
  }
  return Surface::kCylinder;
}

std::optional<std::array<VertexSet, 3>> three_partition(const RGraph& g) {
  require_r3(g.r());
  const auto& verts = g.vertices();
  const std::size_t n = verts.size();
  auto idx = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
  std::vector<std::vector<std::array<std::size_t, 2>>> others(n);
  for (const auto& e : g.edges())
    for (std::size_t k = 0; k < 3; ++k) others[idx(e[k])].push_back({idx(e[(k + 1) % 3]), idx(e[(k + 2) % 3])});
  std::vector<int> color(n, -1);
  std::function<bool(std::size_t, int)> place = [&](std::size_t i, int used) {
    if (i == n) return true;
    for (int c = 0; c < 3 && c <= used + 1; ++c) {
      bool ok = true;
      for (auto [a, b] : others[i]) {
        if ((color[a] == c) || (color[b] == c) || (color[a] >= 0 && color[a] == color[b])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[i] = c;
      if (place(i + 1, std::max(used, c))) return true;
      color[i] = -1;
    }
    return false;
  };
  if (!place(0, -1)) return std::nullopt;
  std::array<VertexSet, 3> classes;
  for (std::size_t i = 0; i < n; ++i) classes[static_cast<std::size_t>(color[i])].push_back(verts[i]);
  return classes;
}

FaceWalk random_face_cycle(std::size_t r, std::size_t length, Rng& rng) {
  if (r < 2 || length < r + 1) throw InputError("random cycles need length > r");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Face> faces;
    Face cur(r - 1);
    std::iota(cur.begin(), cur.end(), Vertex{0});
    faces.push_back(cur);
    Vertex next = static_cast<Vertex>(r - 1);
    for (std::size_t step = 0; step < length; ++step) {
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(rng.below(cur.size())));
      cur.push_back(next++);
      std::sort(cur.begin(), cur.end());
      faces.push_back(cur);
    }
    if (!disjoint(faces.front(), faces.back())) continue;
    // Identify the last face with the first through a random bijection.
    std::vector<Vertex> image(faces.front().begin(), faces.front().end());
    rng.shuffle(image);
    std::vector<Vertex> relabel(next);
    std::iota(relabel.begin(), relabel.end(), Vertex{0});
    for (std::size_t k = 0; k < r - 1; ++k) relabel[faces.back()[k]] = image[k];
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < next; ++v)
      if (relabel[v] == v) kept.push_back(v);
    std::vector<Vertex> names(kept.size());
    std::iota(names.begin(), names.end(), Vertex{0});
    rng.shuffle(names);
    std::map<Vertex, Vertex> rename;
    for (std::size_t k = 0; k < kept.size(); ++k) rename[kept[k]] = names[k];
    FaceWalk w{r, {}};
    bool ok = true;
    for (const auto& f : faces) {
      std::vector<Vertex> g;
      for (Vertex v : f) g.push_back(rename[relabel[v]]);
      std::sort(g.begin(), g.end());
      if (std::adjacent_find(g.begin(), g.end()) != g.end()) {
        ok = false;
        break;
      }
      w.faces.push_back(std::move(g));
    }
    if (!ok || !well_formed(w)) continue;
    if (classify_walk(w) == WalkKind::kCycle) return w;
  }
  throw UnsupportedError("no random cycle found for these parameters");
}

}  // namespace rsub
