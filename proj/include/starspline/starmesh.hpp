#ifndef STARSPLINE_STARMESH_HPP
#define STARSPLINE_STARMESH_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starspline/exact_linalg.hpp"

namespace starspline {

using Vec3 = Eigen::Matrix<Rational, 3, 1>;
using IntVec3 = Eigen::Matrix<Integer, 3, 1>;

enum class StarKind { Closed, Open };

/// Interior two-face: the triangle spanned by the center and the link edge
/// (a, b), a < b, separating cells[0] < cells[1].
struct InteriorFace {
  std::size_t a;
  std::size_t b;
  std::array<std::size_t, 2> cells;
};

/// A vertex star stored as its link. The center is the origin; every cell is
/// the cone over one link polygon.
class VertexStar {
 public:
  StarKind kind() const { return kind_; }
  bool closed() const { return kind_ == StarKind::Closed; }
  bool simplicial() const;

  const std::vector<Vec3>& link_vertices() const { return vertices_; }
  /// Link polygons, oriented so that every cell has positive volume.
  const std::vector<std::vector<std::size_t>>& link_faces() const { return faces_; }

  /// Interior two-faces in canonical order (sorted link-vertex pairs).
  const std::vector<InteriorFace>& interior_faces() const { return interior_faces_; }
  /// Link vertices spanning interior edges, ascending.
  const std::vector<std::size_t>& interior_edges() const { return interior_edges_; }
  /// Interior faces containing the given interior edge (indices into
  /// interior_faces(), ascending).
  const std::vector<std::size_t>& faces_around_edge(std::size_t edge) const {
    return edge_faces_.at(edge);
  }
  /// Interior edges (indices into interior_edges()) of an interior face; an
  /// open star may have 0, 1 or 2 of them.
  std::vector<std::size_t> edges_of_face(std::size_t face) const;

  std::size_t cell_count() const { return faces_.size(); }

 private:
  friend VertexStar build_star(std::vector<Vec3>, std::vector<std::vector<std::size_t>>, StarKind);

  StarKind kind_ = StarKind::Closed;
  std::vector<Vec3> vertices_;
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<InteriorFace> interior_faces_;
  std::vector<std::size_t> interior_edges_;
  std::vector<std::vector<std::size_t>> edge_faces_;
  std::vector<std::ptrdiff_t> vertex_to_edge_;
};

/// Validate a link description and derive the interior combinatorics.
/// Each cell must be a strictly convex cone over its link polygon; the
/// polygon vertices are ray representatives and need not be coplanar.
/// Throws Error with DegenerateCell, NonManifoldLink, Disconnected or
/// InvalidInput.
VertexStar build_star(std::vector<Vec3> link_vertices,
                      std::vector<std::vector<std::size_t>> link_faces, StarKind kind);

struct FaceCounts {
  std::size_t f0 = 0;  // interior vertices
  std::size_t f1 = 0;  // interior edges
  std::size_t f2 = 0;  // interior two-faces
  std::size_t f3 = 0;  // cells
  bool operator==(const FaceCounts&) const = default;
};

FaceCounts face_counts(const VertexStar& star);

struct StarGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Graph whose vertices are the interior edges and whose edges are the
/// interior two-faces joining two of them.
StarGraph star_graph(const VertexStar& star);

std::vector<std::size_t> degree_sequence(const StarGraph& g);

/// True iff g has at least 4 vertices and stays connected after deleting
/// any one or two vertices.
bool is_three_connected(const StarGraph& g);

/// SplitMix64 generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Number of jitter steps on each side of zero.
inline constexpr std::int64_t kJitterSteps = 64;
/// denominator_scale value that turns perturb into the identity.
inline constexpr std::uint64_t kNoJitter = std::numeric_limits<std::uint64_t>::max();

/// Jitter in [-1/scale, 1/scale] with step 1/(kJitterSteps * scale), drawn
/// from SplitMix64 seeded with seed ^ (0x9E3779B97F4A7C15 * (3 * item + coord + 1)).
Rational jitter(std::uint64_t seed, std::size_t item, std::size_t coord,
                std::uint64_t denominator_scale);

/// Per-vertex coordinates that perturb must leave untouched.
using FrozenMask = std::vector<std::array<bool, 3>>;

/// Seeded rational perturbation of the link vertices.
VertexStar perturb(const VertexStar& star, std::uint64_t seed,
                   std::uint64_t denominator_scale, const FrozenMask& frozen = {});

/// perturb, retrying with derived seeds while the result is degenerate.
/// Returns the star and the seed that produced it.
std::pair<VertexStar, std::uint64_t> perturb_with_retry(const VertexStar& star,
                                                        std::uint64_t seed,
                                                        std::uint64_t denominator_scale,
                                                        const FrozenMask& frozen = {},
                                                        int attempts = 8);

struct CatalogParams {
  std::optional<std::uint64_t> seed;
  std::uint64_t denominator_scale = 1000;
};

/// Named example stars. With a seed the star is perturbed (the planar-base
/// bipyramid keeps its equator in z = 0).
VertexStar catalog(const std::string& name, const CatalogParams& params = {});

const std::vector<std::string>& catalog_names();

/// Coordinates the catalog keeps fixed when perturbing the named star.
FrozenMask catalog_frozen_mask(const std::string& name);

}  // namespace starspline

#endif  // STARSPLINE_STARMESH_HPP
