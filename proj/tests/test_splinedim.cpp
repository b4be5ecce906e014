#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "starspline/bounds.hpp"
#include "starspline/combinatorics.hpp"
#include "starspline/error.hpp"
#include "starspline/splinedim.hpp"

using namespace starspline;

TEST_CASE("homogeneous spline dimension matches the direct oracle") {
  struct Case {
    const char* name;
    std::uint64_t seed;
    int r_max;
    int d_max;
  };
  for (const Case c : {Case{"alfeld-split", 1, 2, 5}, Case{"alfeld-split", 0, 1, 4},
                       Case{"regular-octahedron", 0, 1, 4}, Case{"regular-octahedron", 2, 1, 4},
                       Case{"triangular-bipyramid", 1, 1, 4}, Case{"cube-barycentric", 1, 1, 3}}) {
    const VertexStar s = c.seed == 0 ? catalog(c.name) : catalog(c.name, {c.seed});
    for (int r = 0; r <= c.r_max; ++r)
      for (int d = 0; d <= c.d_max; ++d) {
        INFO(c.name << " seed " << c.seed << " r " << r << " d " << d);
        const std::size_t expect = oracle::homog_spline_dim(s, r, d);
        CHECK(homog_dim(s, r, d) == expect);
        CHECK(homog_dim_cells(s, r, d) == expect);
      }
  }
}

TEST_CASE("certification paths agree") {
  const VertexStar s = catalog("pentagonal-bipyramid", {1});
  HomogOptions plain;
  plain.use_lower_bound = false;
  for (int d = 0; d <= 7; ++d) {
    const HomogDim a = homog_dim_certified(s, 2, d);
    const HomogDim b = homog_dim_certified(s, 2, d, plain);
    CHECK(a.value == b.value);
    CHECK(a.proof != DimProof::Unfinished);
    CHECK(b.proof != DimProof::Unfinished);
    CHECK(static_cast<std::int64_t>(a.value) >= proven_homog_lower_bound(s, 2, d));
  }
  CHECK(homog_dim_certified(s, 2, 2).proof == DimProof::Trivial);
}

TEST_CASE("global polynomials only up to the vertex threshold") {
  for (const auto& name : {"alfeld-split", "triangular-bipyramid", "regular-octahedron"}) {
    const VertexStar s = catalog(name, {1});
    for (int r = 0; r <= 2; ++r) CHECK(whiteley_check(s, r));
  }
}

TEST_CASE("planar base carries an extra split-plane spline family") {
  const VertexStar s = catalog("pentagonal-bipyramid-planar-base", {1});
  for (int r = 1; r <= 3; ++r)
    for (int d = r + 1; d <= r + 3; ++d)
      CHECK(static_cast<std::int64_t>(homog_dim(s, r, d)) >= binom(d + 2, 2) + binom(d + 1 - r, 2));
}

TEST_CASE("generic dimension reports seeds and states") {
  const VertexStar base = catalog("pentagonal-bipyramid");
  const GenericDim g = generic_homog_dim(base, 2, 5, 3, 1);
  CHECK(g.value == 27);
  CHECK(g.state == GenericState::Certified);
  REQUIRE_FALSE(g.seeds.empty());
  CHECK(g.seeds[0] == 1);
  CHECK(g.seeds.size() + g.trials_skipped == 3);
  CHECK(g.trial_values.size() == g.seeds.size());

  const GenericDim again = generic_homog_dim(base, 2, 5, 3, 1);
  CHECK(again.value == g.value);
  CHECK(again.seeds == g.seeds);

  // With its equator kept planar the bipyramid stays above the bound for
  // its combinatorial type, so no trial can certify it.
  GenericOptions planar;
  planar.frozen = catalog_frozen_mask("pentagonal-bipyramid-planar-base");
  const GenericDim open =
      generic_homog_dim(catalog("pentagonal-bipyramid-planar-base"), 3, 7, 2, 1, planar);
  CHECK(open.value == 51);
  CHECK(open.proven_lower == 45);
  CHECK(open.state == GenericState::Bounded);
  CHECK(open.seeds.size() == 2);
  CHECK(to_string(GenericState::Bounded) == "bounded");
}

TEST_CASE("spline dimension sums the homogeneous pieces") {
  const VertexStar s = catalog("alfeld-split", {1});
  std::size_t total = 0;
  for (int d = 0; d <= 5; ++d) {
    total += homog_dim(s, 1, d);
    CHECK(spline_dim(s, 1, d) == total);
  }
  Vec3 a, b, c;
  a << 1, 0, 0;
  b << 0, 1, 0;
  c << 0, 0, 1;
  const VertexStar open = build_star({a, b, c}, {{0, 1, 2}}, StarKind::Open);
  CHECK_THROWS_AS(whiteley_check(open, 1), Error);
}
