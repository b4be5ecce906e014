#include "starspline/starmesh.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "starspline/error.hpp"

namespace starspline {

namespace {

Vec3 cross(const Vec3& u, const Vec3& v) {
  Vec3 out;
  out << u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0);
  return out;
}

Rational dot(const Vec3& u, const Vec3& v) { return u(0) * v(0) + u(1) * v(1) + u(2) * v(2); }


int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

bool is_zero(const Vec3& v) { return v(0) == 0 && v(1) == 0 && v(2) == 0; }

using EdgeKey = std::pair<std::size_t, std::size_t>;

EdgeKey key(std::size_t u, std::size_t v) { return u < v ? EdgeKey{u, v} : EdgeKey{v, u}; }

// Checks that the cone over one link polygon is a strictly convex
// polyhedral cone and returns its orientation. Only the rays matter, so a
// polygon need not be planar as given.
int cell_orientation(const std::vector<Vec3>& vs, const std::vector<std::size_t>& face,
                     std::size_t index) {
  const std::string where = "cell " + std::to_string(index);
  const std::size_t n = face.size();
  int orientation = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 normal = cross(vs[face[i]], vs[face[(i + 1) % n]]);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == (i + 1) % n) continue;
      const int s = sign(dot(normal, vs[face[k]]));
      if (s == 0)
        throw Error(Errc::DegenerateCell,
                    where + (n == 3 ? ": the cone is flat" : ": three rays are coplanar"));
      if (orientation == 0) orientation = s;
      if (s != orientation) throw Error(Errc::DegenerateCell, where + ": the cone is not convex");
    }
  }
  return orientation;
}

}  // namespace

bool VertexStar::simplicial() const {
  return std::all_of(faces_.begin(), faces_.end(), [](const auto& f) { return f.size() == 3; });
}

std::vector<std::size_t> VertexStar::edges_of_face(std::size_t face) const {
  std::vector<std::size_t> out;
  const auto& f = interior_faces_.at(face);
  for (std::size_t v : {f.a, f.b})
    if (vertex_to_edge_[v] >= 0) out.push_back(static_cast<std::size_t>(vertex_to_edge_[v]));
  return out;
}

VertexStar build_star(std::vector<Vec3> link_vertices,
                      std::vector<std::vector<std::size_t>> link_faces, StarKind kind) {
  const std::size_t nv = link_vertices.size();
  if (link_faces.empty()) throw Error(Errc::InvalidInput, "the link has no faces");
  for (std::size_t i = 0; i < nv; ++i)
    if (is_zero(link_vertices[i]))
      throw Error(Errc::DegenerateCell, "link vertex " + std::to_string(i) + " is the center");

  std::vector<bool> used(nv, false);
  for (std::size_t f = 0; f < link_faces.size(); ++f) {
    const auto& face = link_faces[f];
    if (face.size() < 3)
      throw Error(Errc::InvalidInput, "link face " + std::to_string(f) + " has fewer than 3 vertices");
    std::set<std::size_t> distinct(face.begin(), face.end());
    if (distinct.size() != face.size())
      throw Error(Errc::InvalidInput, "link face " + std::to_string(f) + " repeats a vertex");
    for (std::size_t v : face) {
      if (v >= nv)
        throw Error(Errc::InvalidInput, "link face " + std::to_string(f) + " has index out of range");
      used[v] = true;
    }
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (!used[v]) throw Error(Errc::InvalidInput, "link vertex " + std::to_string(v) + " is unused");

  // Link edges and the faces using them.
  std::map<EdgeKey, std::vector<std::size_t>> edge_faces;
  for (std::size_t f = 0; f < link_faces.size(); ++f) {
    const auto& face = link_faces[f];
    for (std::size_t i = 0; i < face.size(); ++i)
      edge_faces[key(face[i], face[(i + 1) % face.size()])].push_back(f);
  }
  for (const auto& [e, fs] : edge_faces) {
    const bool ok = kind == StarKind::Closed ? fs.size() == 2 : (fs.size() == 1 || fs.size() == 2);
    if (!ok || (fs.size() == 2 && fs[0] == fs[1]))
      throw Error(Errc::NonManifoldLink, "link edge (" + std::to_string(e.first) + "," +
                                             std::to_string(e.second) + ") lies in " +
                                             std::to_string(fs.size()) + " faces");
  }

  // Connectivity of the link edge graph.
  {
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [e, fs] : edge_faces) parent[find(e.first)] = find(e.second);
    for (std::size_t v = 1; v < nv; ++v)
      if (find(v) != find(0)) throw Error(Errc::Disconnected, "the link is not connected");
  }

  const long long euler = static_cast<long long>(nv) - static_cast<long long>(edge_faces.size()) +
                          static_cast<long long>(link_faces.size());
  if (euler != (kind == StarKind::Closed ? 2 : 1))
    throw Error(Errc::NonManifoldLink, "link Euler characteristic is " + std::to_string(euler));

  // Orient the link coherently: a shared edge must be traversed in opposite
  // directions by its two faces.
  auto traverses = [](const std::vector<std::size_t>& face, std::size_t u, std::size_t v) {
    for (std::size_t i = 0; i < face.size(); ++i)
      if (face[i] == u && face[(i + 1) % face.size()] == v) return true;
    return false;
  };
  {
    std::vector<int> state(link_faces.size(), 0);  // 1 once the orientation is fixed
    state[0] = 1;
    std::queue<std::size_t> todo;
    todo.push(0);
    std::vector<bool> done(link_faces.size(), false);
    while (!todo.empty()) {
      const std::size_t f = todo.front();
      todo.pop();
      if (done[f]) continue;
      done[f] = true;
      const auto& face = link_faces[f];
      for (std::size_t i = 0; i < face.size(); ++i) {
        const std::size_t u = face[i], v = face[(i + 1) % face.size()];
        for (std::size_t g : edge_faces[key(u, v)]) {
          if (g == f) continue;
          const bool coherent = traverses(link_faces[g], v, u);
          if (state[g] == 0) {
            if (!coherent) std::reverse(link_faces[g].begin(), link_faces[g].end());
            state[g] = 1;
            todo.push(g);
          } else if (!coherent) {
            throw Error(Errc::NonManifoldLink, "the link is not orientable");
          }
        }
      }
    }
  }

  int orientation = 0;
  for (std::size_t f = 0; f < link_faces.size(); ++f) {
    const int s = cell_orientation(link_vertices, link_faces[f], f);
    if (orientation == 0) orientation = s;
    if (s != orientation)
      throw Error(Errc::DegenerateCell, "cell " + std::to_string(f) + " overlaps its neighbours");
  }
  if (orientation < 0)
    for (auto& face : link_faces) std::reverse(face.begin(), face.end());

  VertexStar star;
  star.kind_ = kind;
  star.vertices_ = std::move(link_vertices);
  star.faces_ = std::move(link_faces);

  std::vector<bool> boundary(nv, false);
  for (const auto& [e, fs] : edge_faces) {
    if (fs.size() == 2) {
      star.interior_faces_.push_back(
          {e.first, e.second, {std::min(fs[0], fs[1]), std::max(fs[0], fs[1])}});
    } else {
      boundary[e.first] = boundary[e.second] = true;
    }
  }
  star.vertex_to_edge_.assign(nv, -1);
  for (std::size_t v = 0; v < nv; ++v)
    if (!boundary[v]) {
      star.vertex_to_edge_[v] = static_cast<std::ptrdiff_t>(star.interior_edges_.size());
      star.interior_edges_.push_back(v);
    }
  star.edge_faces_.assign(star.interior_edges_.size(), {});
  for (std::size_t i = 0; i < star.interior_faces_.size(); ++i)
    for (std::size_t e : star.edges_of_face(i)) star.edge_faces_[e].push_back(i);
  return star;
}

FaceCounts face_counts(const VertexStar& star) {
  return {star.closed() ? 1u : 0u, star.interior_edges().size(), star.interior_faces().size(),
          star.cell_count()};
}

StarGraph star_graph(const VertexStar& star) {
  StarGraph g;
  g.vertex_count = star.interior_edges().size();
  for (std::size_t i = 0; i < star.interior_faces().size(); ++i) {
    const auto ends = star.edges_of_face(i);
    if (ends.size() == 2) g.edges.emplace_back(ends[0], ends[1]);
  }
  return g;
}

std::vector<std::size_t> degree_sequence(const StarGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count, 0);
  for (const auto& [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

bool is_three_connected(const StarGraph& g) {
  const std::size_t n = g.vertex_count;
  if (n < 4) return false;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  auto connected_without = [&](std::size_t x, std::size_t y) {
    std::vector<bool> seen(n, false);
    seen[x] = seen[y] = true;
    std::size_t start = 0;
    while (seen[start]) ++start;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u])
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == n - (x == y ? 1 : 2);
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      if (!connected_without(x, y)) return false;
  return true;
}

Rational jitter(std::uint64_t seed, std::size_t item, std::size_t coord,
                std::uint64_t denominator_scale) {
  if (denominator_scale == kNoJitter) return Rational(0);
  if (denominator_scale == 0) throw Error(Errc::InvalidInput, "denominator scale must be positive");
  SplitMix64 gen(seed ^ (0x9E3779B97F4A7C15ull * (3 * static_cast<std::uint64_t>(item) + coord + 1)));
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(kJitterSteps) + 1;
  const std::int64_t k = static_cast<std::int64_t>(gen.next() % span) - kJitterSteps;
  return Rational(Integer(k), Integer(kJitterSteps) * Integer(denominator_scale));
}

VertexStar perturb(const VertexStar& star, std::uint64_t seed, std::uint64_t denominator_scale,
                   const FrozenMask& frozen) {
  if (denominator_scale == kNoJitter) return star;
  std::vector<Vec3> vs = star.link_vertices();
  for (std::size_t v = 0; v < vs.size(); ++v)
    for (std::size_t c = 0; c < 3; ++c) {
      if (v < frozen.size() && frozen[v][c]) continue;
      vs[v](static_cast<Eigen::Index>(c)) += jitter(seed, v, c, denominator_scale);
    }
  return build_star(std::move(vs), star.link_faces(), star.kind());
}

std::pair<VertexStar, std::uint64_t> perturb_with_retry(const VertexStar& star,
                                                        std::uint64_t seed,
                                                        std::uint64_t denominator_scale,
                                                        const FrozenMask& frozen, int attempts) {
  std::uint64_t s = seed;
  for (int i = 0;; ++i) {
    try {
      return {perturb(star, s, denominator_scale, frozen), s};
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateCell || i + 1 >= attempts) throw;
    }
    s = SplitMix64(s).next();
  }
}

}  // namespace starspline
