#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "starspline/bounds.hpp"
#include "starspline/combinatorics.hpp"
#include "starspline/error.hpp"
#include "starspline/face_ideals.hpp"
#include "starspline/starmesh.hpp"

using namespace starspline;

namespace {

Vec3 v3(long x, long y, long z) {
  Vec3 v;
  v << Rational(x), Rational(y), Rational(z);
  return v;
}

const std::vector<std::string> kSimplicial{"regular-octahedron", "alfeld-split", "triangular-bipyramid",
                                           "pentagonal-bipyramid"};

VertexStar two_cells() {
  return build_star({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(0, 0, -1)}, {{0, 1, 2}, {1, 0, 3}},
                    StarKind::Open);
}

VertexStar skew_half_octahedron() {
  return build_star({v3(5, 1, 0), v3(-1, 7, 1), v3(-6, -1, 2), v3(1, -5, -1), v3(1, 2, 9)},
                    {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}}, StarKind::Open);
}

}  // namespace

TEST_CASE("vertex degree threshold branches on the interior edge count") {
  CHECK(d_gamma(4, 2) == 4);
  CHECK(d_gamma(5, 3) == 5);
  CHECK(d_gamma(7, 2) == 3);
  CHECK(d_gamma(6, 0) == 0);
  CHECK_THROWS_AS(d_gamma(3, 1), Error);
}

TEST_CASE("closed-star bound on generic stars") {
  const VertexStar pent = catalog("pentagonal-bipyramid", {1});
  CHECK(lbcs(pent, 1, 3) == 16);
  CHECK(lbcs(pent, 2, 4) == 12);
  CHECK(lbcs(catalog("cube-barycentric", {1}), 1, 6) == 36);
  CHECK_THROWS_AS(lbcs(skew_half_octahedron(), 1, 3), Error);
}

TEST_CASE("open-star bound") {
  const VertexStar two = two_cells();
  CHECK(lbos(two, 1, 2) == 7);
  for (int r = 0; r <= 2; ++r)
    for (int d = 0; d <= r; ++d) CHECK(lbos(two, r, d) == binom(d + 2, 2));
  for (int r = 0; r <= 2; ++r)
    for (int d = 0; d <= 6; ++d) {
      CHECK(lbos(two, r, d) <= static_cast<std::int64_t>(oracle::homog_spline_dim(two, r, d)));
      const VertexStar half = skew_half_octahedron();
      CHECK(lbos(half, r, d) <= static_cast<std::int64_t>(oracle::homog_spline_dim(half, r, d)));
    }
  CHECK(lbos(two, 1, 2) == static_cast<std::int64_t>(oracle::homog_spline_dim(two, 1, 2)));
  CHECK_THROWS_AS(lbos(catalog("regular-octahedron"), 1, 2), Error);
}

TEST_CASE("f1-only closed form agrees with the bound from d = r on") {
  for (const auto& name : kSimplicial) {
    const VertexStar s = catalog(name, {1});
    for (int r = 0; r <= 3; ++r)
      for (int d = r; d <= 3 * r + 4; ++d) CHECK(lbcs_closed_form(s, r, d) == lbcs(s, r, d));
  }
  CHECK(lbcs_closed_form(catalog("pentagonal-bipyramid", {1}), 1, 3) == 16);
}

TEST_CASE("f1-only closed form departs from the bound below d = r") {
  const VertexStar oct = catalog("regular-octahedron", {1});
  CHECK(lbcs(oct, 1, 0) == 2);
  CHECK(lbcs_closed_form(oct, 1, 0) == 14);
  CHECK(lbcs_closed_form(oct, 1, 0) != lbcs(oct, 1, 0));
  CHECK_THROWS_AS(lbcs_closed_form(skew_half_octahedron(), 1, 2), Error);
}

TEST_CASE("bound equals the Euler characteristic expression") {
  for (const auto& name : catalog_names()) {
    if (name == "pentagonal-bipyramid-planar-base") continue;
    const VertexStar s = catalog(name, {1});
    const auto f1 = static_cast<std::int64_t>(s.interior_edges().size());
    for (int r = 0; r <= 3; ++r)
      for (int d = 0; d <= 3 * r + 3; ++d) {
        const std::int64_t chi = euler_char_J(s, r, d, true);
        const auto jg = static_cast<std::int64_t>(dim_J_gamma_exact(s, r, d));
        CHECK(lbcs(s, r, d) == 2 * binom(d + 2, 2) - jg + chi);
        if (d > d_gamma(f1, r)) {
          CHECK(lbcs(s, r, d) == binom(d + 2, 2) + chi);
          CHECK(euler_char_J(s, r, d, false) == chi);
        }
      }
  }
}

TEST_CASE("Euler characteristic examples") {
  const VertexStar pent = catalog("pentagonal-bipyramid", {1});
  CHECK(euler_char_J(pent, 2, 4, true) == -3);
  for (int r = 0; r <= 3; ++r)
    for (int d = 0; d <= r; ++d) CHECK(euler_char_J(pent, r, d, true) == 0);
}

TEST_CASE("homogeneous lower bound report") {
  const VertexStar pent = catalog("pentagonal-bipyramid", {1});
  const BoundReport a = homog_lower_bound(pent, 2, 4);
  CHECK(a.best_lower == 15);
  CHECK(a.lbcs == 12);
  CHECK(a.trivial_dim == 15);
  CHECK(a.d_gamma == 3);
  CHECK(a.applicable);
  CHECK(homog_lower_bound(pent, 2, 6).best_lower == 52);
  CHECK(homog_lower_bound(pent, 1, 2).best_lower == 6);
  const BoundReport low = homog_lower_bound(pent, 2, 3);
  CHECK_FALSE(low.applicable);
  CHECK(low.best_lower == 10);
}

TEST_CASE("spline lower bound sums the homogeneous bounds") {
  const VertexStar pent = catalog("pentagonal-bipyramid", {1});
  CHECK(spline_lower_bound(pent, 2, 3, false) == 20);
  CHECK(spline_lower_bound(pent, 2, 5, false) == 59);
  CHECK(spline_lower_bound(pent, 2, 4, true) == 35);
  CHECK_THROWS_AS(spline_lower_bound(pent, 2, 2, false), Error);
  // Polynomial form of the sum without the max, scaled by 6.
  for (int d = 4; d <= 9; ++d)
    CHECK(6 * spline_lower_bound(pent, 2, d, false) == 10 * d * d * d - 75 * d * d + 227 * d - 156);
}

TEST_CASE("homology dimensions from exact data") {
  const VertexStar pent = catalog("pentagonal-bipyramid", {1});
  const HomologyDims h = homology_dims(pent, 2, 4);
  CHECK(h.h2 == 0);
  CHECK(h.h1 == 3);
  const HomologyDims z = homology_dims(pent, 2, 0);
  CHECK(z.h2 == 0);
  CHECK(z.h1 == 0);
  const HomologyDims given = homology_dims(pent, 2, 4, 15);
  CHECK(given.h1 == 3);
}
