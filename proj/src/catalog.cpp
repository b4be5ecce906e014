#include <algorithm>

#include "starspline/error.hpp"
#include "starspline/starmesh.hpp"

namespace starspline {

namespace {

Vec3 v3(long x, long y, long z) {
  Vec3 out;
  out << Rational(x), Rational(y), Rational(z);
  return out;
}

using Faces = std::vector<std::vector<std::size_t>>;

// Bipyramid over the polygon equator[0..n-1] with apexes at indices n, n+1.
Faces bipyramid_faces(std::size_t n) {
  Faces faces;
  for (std::size_t i = 0; i < n; ++i) faces.push_back({i, (i + 1) % n, n});
  for (std::size_t i = 0; i < n; ++i) faces.push_back({(i + 1) % n, i, n + 1});
  return faces;
}

VertexStar regular_octahedron() {
  std::vector<Vec3> vs{v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0),
                       v3(0, -1, 0), v3(0, 0, 1), v3(0, 0, -1)};
  Faces faces;
  for (std::size_t sx = 0; sx < 2; ++sx)
    for (std::size_t sy = 0; sy < 2; ++sy)
      for (std::size_t sz = 0; sz < 2; ++sz) faces.push_back({sx, 2 + sy, 4 + sz});
  return build_star(std::move(vs), std::move(faces), StarKind::Closed);
}

VertexStar alfeld_split() {
  std::vector<Vec3> vs{v3(1, 1, 1), v3(1, -1, -1), v3(-1, 1, -1), v3(-1, -1, 1)};
  Faces faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return build_star(std::move(vs), std::move(faces), StarKind::Closed);
}

VertexStar triangular_bipyramid() {
  std::vector<Vec3> vs{v3(3, 0, 1), v3(-1, 3, -1), v3(-2, -3, 0), v3(0, 0, 3), v3(0, 0, -3)};
  return build_star(std::move(vs), bipyramid_faces(3), StarKind::Closed);
}

VertexStar pentagonal_bipyramid() {
  std::vector<Vec3> vs{v3(4, 0, 1),   v3(1, 4, -1), v3(-3, 2, 2), v3(-3, -2, -1),
                       v3(1, -4, 1),  v3(0, 0, 4),  v3(0, 0, -4)};
  return build_star(std::move(vs), bipyramid_faces(5), StarKind::Closed);
}

VertexStar pentagonal_bipyramid_planar_base() {
  std::vector<Vec3> vs{v3(4, 0, 0),  v3(1, 4, 0),  v3(-3, 2, 0), v3(-3, -2, 0),
                       v3(1, -4, 0), v3(1, 1, 5),  v3(-1, 2, -4)};
  return build_star(std::move(vs), bipyramid_faces(5), StarKind::Closed);
}

VertexStar cube_barycentric() {
  std::vector<Vec3> vs;
  for (long x : {-1, 1})
    for (long y : {-1, 1})
      for (long z : {-1, 1}) vs.push_back(v3(x, y, z));
  // Index = 4 * [x > 0] + 2 * [y > 0] + [z > 0].
  Faces faces{{0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1},
              {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}};
  return build_star(std::move(vs), std::move(faces), StarKind::Closed);
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "regular-octahedron",   "alfeld-split",
      "triangular-bipyramid", "pentagonal-bipyramid",
      "pentagonal-bipyramid-planar-base", "cube-barycentric"};
  return names;
}

FrozenMask catalog_frozen_mask(const std::string& name) {
  if (name == "pentagonal-bipyramid-planar-base") {
    FrozenMask mask(7, {false, false, false});
    for (std::size_t i = 0; i < 5; ++i) mask[i][2] = true;
    return mask;
  }
  return {};
}

VertexStar catalog(const std::string& name, const CatalogParams& params) {
  VertexStar star = [&] {
    if (name == "regular-octahedron") return regular_octahedron();
    if (name == "alfeld-split") return alfeld_split();
    if (name == "triangular-bipyramid") return triangular_bipyramid();
    if (name == "pentagonal-bipyramid") return pentagonal_bipyramid();
    if (name == "pentagonal-bipyramid-planar-base") return pentagonal_bipyramid_planar_base();
    if (name == "cube-barycentric") return cube_barycentric();
    throw Error(Errc::UnknownName, "no catalog star named '" + name + "'");
  }();
  if (!params.seed) return star;
  return perturb_with_retry(star, *params.seed, params.denominator_scale,
                            catalog_frozen_mask(name))
      .first;
}

}  // namespace starspline
