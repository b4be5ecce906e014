#include <catch_amalgamated.hpp>

#include <numeric>

#include "oracles.hpp"
#include "starspline/combinatorics.hpp"
#include "starspline/error.hpp"
#include "starspline/face_ideals.hpp"
#include "starspline/fatpoints.hpp"

using namespace starspline;

namespace {

std::vector<std::array<Integer, 3>> oracle_points(const FatPointConfig& c) {
  std::vector<std::array<Integer, 3>> out;
  for (const auto& p : c.points) out.push_back({p.coeffs(0), p.coeffs(1), p.coeffs(2)});
  return out;
}

std::vector<std::size_t> passes(const FatPointConfig& c, int count) {
  std::vector<std::size_t> seq;
  for (int k = 0; k < count; ++k)
    for (std::size_t i = 0; i < c.lines.size(); ++i) seq.push_back(i);
  return seq;
}

std::int64_t oracle_alpha(const FatPointConfig& c, int m) {
  const auto pts = oracle_points(c);
  const std::vector<int> mult(pts.size(), m);
  for (int d = 0;; ++d)
    if (oracle::fat_point_dim(pts, mult, d) > 0) return d;
}

ProjectivePoint point(long a, long b, long c) {
  Vec3 v;
  v << Rational(a), Rational(b), Rational(c);
  return normalize_form(v);
}

}  // namespace

TEST_CASE("dual configurations") {
  const FatPointConfig reg = dual_config(catalog("regular-octahedron"));
  CHECK(reg.points.size() == 3);
  CHECK(reg.lines.size() == 3);
  for (const auto& l : reg.lines) CHECK(l.points.size() == 2);

  const FatPointConfig gen = dual_config(catalog("regular-octahedron", {1}));
  CHECK(gen.points.size() == 12);
  CHECK(gen.lines.size() == 6);
  std::vector<int> on(gen.points.size(), 0);
  for (const auto& l : gen.lines) {
    CHECK(l.points.size() == 4);
    for (auto p : l.points) ++on[p];
  }
  for (int k : on) CHECK(k == 2);

  CHECK(dual_config(catalog("pentagonal-bipyramid-planar-base")).points.size() == 11);
  CHECK(gen.face_to_point.size() == 12);
  CHECK(gen.edge_to_line.size() == 6);
}

TEST_CASE("Example: three double points on the coordinate triangle") {
  const FatPointConfig reg = dual_config(catalog("regular-octahedron"));
  CHECK(fatpoint_dim_exact(reg, {2, 2, 2}, 3) == 1);
  CHECK(fatpoint_dim_exact(reg, {2, 2, 2}, 2) == 0);
  CHECK(fatpoint_dim_exact(point_config({point(1, 2, 3)}), {1}, 1) == 2);
}

TEST_CASE("reduction of the coordinate triangle") {
  const FatPointConfig reg = dual_config(catalog("regular-octahedron"));
  const ReductionVector rv = reduce(reg, {2, 2, 2}, {1, 0, 2});
  CHECK(rv.entries == std::vector<std::int64_t>{4, 3, 2});
  CHECK(rv.residuals == std::vector<std::int64_t>{0, 0, 0});
  CHECK(is_full(rv));
  CHECK(alpha_bound(rv) == std::pair<std::int64_t, std::int64_t>{3, 3});
  CHECK(cht_dim_bounds(rv, 3) == std::pair<std::int64_t, std::int64_t>{1, 1});
  CHECK(cht_dim_bounds(rv, 2).first == 0);

  const ReductionVector none = reduce(reg, {2, 2, 2}, {});
  CHECK(none.entries.empty());
  CHECK(none.residuals == std::vector<std::int64_t>{2, 2, 2});
  CHECK_FALSE(is_full(none));
  CHECK_THROWS_AS(cht_dim_bounds(none, 3), Error);

  const FatPointConfig one = point_config({point(0, 0, 1)});
  CHECK(one.lines.empty());
}

TEST_CASE("Example: generic octahedron with quadruple points") {
  const FatPointConfig gen = dual_config(catalog("regular-octahedron", {1}));
  const ReductionVector rv = reduce(gen, std::vector<std::int64_t>(12, 4), passes(gen, 2));
  CHECK(rv.entries == std::vector<std::int64_t>{16, 16, 14, 14, 12, 12, 8, 8, 6, 6, 4, 4});
  CHECK(is_full(rv));
  CHECK(alpha_bound(rv) == std::pair<std::int64_t, std::int64_t>{12, 12});
  CHECK(canonical_reduction(gen, 2).entries == rv.entries);
  CHECK(canonical_reduction(gen, 1).entries == std::vector<std::int64_t>{8, 8, 6, 6, 4, 4});
}

TEST_CASE("canonical reduction satisfies the entrywise lower bounds") {
  for (const char* name : {"regular-octahedron", "alfeld-split", "triangular-bipyramid", "pentagonal-bipyramid"}) {
    const FatPointConfig c = dual_config(catalog(name, {1}));
    const auto f1 = static_cast<std::int64_t>(c.lines.size());
    for (int s = 1; s <= 3; ++s) {
      const ReductionVector rv = canonical_reduction(c, s);
      REQUIRE(rv.entries.size() == static_cast<std::size_t>(s * f1));
      CHECK(is_full(rv));
      for (int k = 0; k < s; ++k)
        for (std::int64_t i = 0; i < f1; ++i) {
          const auto n = static_cast<std::int64_t>(c.lines[static_cast<std::size_t>(i)].points.size());
          CHECK(rv.entries[static_cast<std::size_t>(k * f1 + i)] >= (2 * (s - k) - 1) * n);
        }
      const std::int64_t a = symbolic_alpha(c, 2 * s);
      CHECK(a >= std::min<std::int64_t>(6 * s - 3, (s - 1) * f1 + 3));
      if (f1 >= 6) CHECK(a >= std::max<std::int64_t>(6 * s - 3, (s - 1) * f1 + 3));
    }
  }
}

TEST_CASE("dimension and initial degree sandwiches") {
  std::vector<FatPointConfig> configs{dual_config(catalog("regular-octahedron"))};
  for (const auto& name : catalog_names()) configs.push_back(dual_config(catalog(name, {1})));
  for (const auto& c : configs) {
    const auto pts = oracle_points(c);
    for (int m = 1; m <= 3; ++m) {
      const std::vector<std::int64_t> mult(pts.size(), m);
      const ReductionVector rv = reduce(c, mult, passes(c, (m + 1) / 2));
      if (!is_full(rv)) continue;
      for (int d = 0; d <= 9; ++d) {
        const auto exact = static_cast<std::int64_t>(oracle::fat_point_dim(pts, std::vector<int>(pts.size(), m), d));
        CHECK(static_cast<std::int64_t>(fatpoint_dim_exact(c, mult, d)) == exact);
        const auto [lo, hi] = cht_dim_bounds(rv, d);
        CHECK(lo <= exact);
        CHECK(exact <= hi);
      }
      const bool positive =
          std::all_of(rv.entries.begin(), rv.entries.end(), [](std::int64_t e) { return e > 0; });
      if (!positive) continue;
      const auto [alo, ahi] = alpha_bound(rv);
      const std::int64_t a = oracle_alpha(c, m);
      CHECK(alo <= a);
      CHECK(a <= ahi);
      CHECK(symbolic_alpha(c, m) == a);
    }
  }
}

TEST_CASE("fat points are dual to the vertex ideal") {
  for (const VertexStar& s : {catalog("regular-octahedron"), catalog("regular-octahedron", {1})}) {
    const FatPointConfig c = dual_config(s);
    for (int r = 0; r <= 2; ++r)
      for (int d = r + 1; d <= r + 4; ++d)
        CHECK(binom(d + 2, 2) - static_cast<std::int64_t>(dim_J_gamma_exact(s, r, d)) ==
              static_cast<std::int64_t>(fatpoint_dim_exact(c, std::vector<std::int64_t>(c.points.size(), d - r), d)));
  }
}

TEST_CASE("reduction removes one unit per positive point on the line") {
  const FatPointConfig c = dual_config(catalog("pentagonal-bipyramid", {1}));
  std::vector<std::int64_t> mult(c.points.size());
  for (std::size_t i = 0; i < mult.size(); ++i) mult[i] = static_cast<std::int64_t>(i % 4);
  const std::vector<std::size_t> seq{0, 3, 3, 1, 6, 2, 0, 5, 4, 4};
  const ReductionVector rv = reduce(c, mult, seq);
  std::vector<std::int64_t> cur = mult;
  std::int64_t removed = 0;
  for (std::size_t step = 0; step < seq.size(); ++step) {
    std::int64_t sum = 0;
    for (auto p : c.lines[seq[step]].points)
      if (cur[p] > 0) {
        sum += cur[p];
        --cur[p];
        ++removed;
      }
    CHECK(rv.entries[step] == sum);
  }
  CHECK(rv.residuals == cur);
  const auto total = [](const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  CHECK(total(rv.residuals) == total(mult) - removed);
}

TEST_CASE("fullness degree, Chudnovsky and Waldschmidt bounds") {
  CHECK(fullness_degree(Rational(3), 2) == 4);
  CHECK(fullness_degree(Rational(2), 4) == 9);
  CHECK(fullness_degree(Rational(5, 2), 3) == 6);
  CHECK_THROWS_AS(fullness_degree(Rational(1), 3), Error);
  CHECK(chudnovsky_lower(3) == Rational(2));
  CHECK(chudnovsky_lower(2) == Rational(3, 2));
  CHECK(chudnovsky_lower(1) == Rational(1));
  CHECK(waldschmidt_lower(dual_config(catalog("alfeld-split", {1}))) == Rational(2));
  CHECK(waldschmidt_lower(dual_config(catalog("triangular-bipyramid", {1}))) == Rational(5, 2));
  CHECK(waldschmidt_lower(dual_config(catalog("regular-octahedron", {1}))) == Rational(3));
  CHECK(waldschmidt_lower(dual_config(catalog("pentagonal-bipyramid", {1}))) == Rational(3));
  CHECK_THROWS_AS(waldschmidt_lower(dual_config(catalog("pentagonal-bipyramid-planar-base"))), Error);
}

TEST_CASE("few edges give a Waldschmidt constant below 3") {
  // Four general lines: their product is a quartic double at all six points,
  // so alpha(I^(2s)) <= 4s.
  const FatPointConfig alfeld = dual_config(catalog("alfeld-split", {1}));
  CHECK(symbolic_alpha(alfeld, 2) == 4);
  CHECK(symbolic_alpha(alfeld, 4) == 8);
  CHECK(symbolic_alpha(alfeld, 4) < 9);
  const FatPointConfig tri = dual_config(catalog("triangular-bipyramid", {1}));
  CHECK(symbolic_alpha(tri, 6) == 15);
}

TEST_CASE("Waldschmidt estimates") {
  const FatPointConfig reg = dual_config(catalog("regular-octahedron"));
  // Three simple points lie on a conic; doubled they need the cubic xyz.
  CHECK(waldschmidt_estimate(reg, 2) == std::vector<Rational>{Rational(2), Rational(3, 2)});
  const FatPointConfig one = point_config({point(1, 1, 0)});
  for (const auto& q : waldschmidt_estimate(one, 4)) CHECK(q == Rational(1));

  const FatPointConfig planar = dual_config(catalog("pentagonal-bipyramid-planar-base"));
  const auto pts = oracle_points(planar);
  const std::vector<int> five(pts.size(), 5);
  CHECK(oracle::fat_point_dim(pts, five, 12) == 0);
  CHECK(oracle::fat_point_dim(pts, five, 13) >= 1);
  const auto est = waldschmidt_estimate(planar, 5);
  REQUIRE(est.size() == 5);
  CHECK(est[4] == Rational(13, 5));
  for (const auto& q : est) CHECK(chudnovsky_lower(symbolic_alpha(planar, 1)) <= q);
}
