#ifndef STARSPLINE_TESTS_ORACLES_HPP
#define STARSPLINE_TESTS_ORACLES_HPP

// Slow, direct reference computations used to cross-check the library.
// They share only the numeric types with the code under test.

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "starspline/starmesh.hpp"

namespace oracle {

using starspline::Integer;
using starspline::Rational;

using RationalRows = std::vector<std::vector<Rational>>;

// Gauss-Jordan elimination over the rationals.
inline std::size_t rank(RationalRows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational t = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= t * m[r][j];
    }
    ++r;
  }
  return r;
}

// Sparse polynomial in three variables.
using Monomial = std::array<int, 3>;
using Poly = std::map<Monomial, Rational>;

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Rational& slot = out[{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}];
      slot += ca * cb;
    }
  return out;
}

inline Poly power(const Poly& p, int e) {
  Poly out{{{0, 0, 0}, Rational(1)}};
  for (int i = 0; i < e; ++i) out = multiply(out, p);
  return out;
}

// x^a y^b z^c with x, y, z replaced by the given linear polynomials.
inline Poly substitute_monomial(const Monomial& m, const std::array<Poly, 3>& images) {
  return multiply(multiply(power(images[0], m[0]), power(images[1], m[1])), power(images[2], m[2]));
}

inline std::vector<Monomial> degree_monomials(int d) {
  std::vector<Monomial> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

inline std::array<Integer, 3> cross(const std::array<Integer, 3>& u, const std::array<Integer, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// Dimension of homogeneous degree-d splines that are C^r across every
// interior face. Across a face spanned by the origin, v and w the condition
// is that the difference of the two cell polynomials, written in the
// coordinates (s, t, u) -> s v + t w + u n with n = v x w, has no term of
// u-degree <= r.
inline std::size_t homog_spline_dim(const starspline::VertexStar& star, int r, int d) {
  const auto basis = degree_monomials(d);
  const std::size_t N = basis.size();
  const std::size_t cols = star.cell_count() * N;
  RationalRows rows;
  for (const auto& face : star.interior_faces()) {
    const auto& v = star.link_vertices()[face.a];
    const auto& w = star.link_vertices()[face.b];
    std::array<Poly, 3> images;
    for (int c = 0; c < 3; ++c) {
      const Rational n = v((c + 1) % 3) * w((c + 2) % 3) - v((c + 2) % 3) * w((c + 1) % 3);
      Poly p;
      if (v(c) != 0) p[{1, 0, 0}] = v(c);
      if (w(c) != 0) p[{0, 1, 0}] = w(c);
      if (n != 0) p[{0, 0, 1}] = n;
      images[static_cast<std::size_t>(c)] = p;
    }
    std::vector<Poly> columns;
    for (const auto& m : basis) columns.push_back(substitute_monomial(m, images));
    std::map<Monomial, std::size_t> row_index;
    RationalRows block;
    for (std::size_t j = 0; j < N; ++j)
      for (const auto& [mono, coeff] : columns[j]) {
        if (mono[2] > r || coeff == 0) continue;
        auto [it, inserted] = row_index.emplace(mono, block.size());
        if (inserted) block.emplace_back(cols, Rational(0));
        block[it->second][face.cells[0] * N + j] += coeff;
        block[it->second][face.cells[1] * N + j] -= coeff;
      }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  if (rows.empty()) return cols;
  return cols - rank(rows);
}

// Dimension of degree-d forms vanishing to order mult[i] at the projective
// point points[i]: restrict to the affine chart through the point and ask
// for the Taylor terms of order < mult to vanish.
inline std::size_t fat_point_dim(const std::vector<std::array<Integer, 3>>& points,
                                 const std::vector<int>& mult, int d) {
  const auto basis = degree_monomials(d);
  RationalRows rows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (mult[i] <= 0) continue;
    const auto& P = points[i];
    int k = 0;
    while (P[static_cast<std::size_t>(k)] == 0) ++k;
    std::array<Poly, 3> images;
    int next = 0;
    for (int c = 0; c < 3; ++c) {
      Poly p;
      if (P[static_cast<std::size_t>(c)] != 0) p[{0, 0, 0}] = Rational(P[static_cast<std::size_t>(c)]);
      if (c != k) p[next++ == 0 ? Monomial{1, 0, 0} : Monomial{0, 1, 0}] = Rational(1);
      images[static_cast<std::size_t>(c)] = p;
    }
    std::map<Monomial, std::size_t> row_index;
    RationalRows block;
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (const auto& [mono, coeff] : substitute_monomial(basis[j], images)) {
        if (mono[0] + mono[1] >= mult[i] || coeff == 0) continue;
        auto [it, inserted] = row_index.emplace(mono, block.size());
        if (inserted) block.emplace_back(basis.size(), Rational(0));
        block[it->second][j] += coeff;
      }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  if (rows.empty()) return basis.size();
  return basis.size() - rank(rows);
}

}  // namespace oracle

#endif  // STARSPLINE_TESTS_ORACLES_HPP
