#ifndef STARSPLINE_COMBINATORICS_HPP
#define STARSPLINE_COMBINATORICS_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace starspline {

/// Binomial coefficient with the vanishing convention: C(a, b) = 0 whenever
/// a < b, b < 0 or a < 0.
constexpr std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

/// Number of degree-d monomials in three variables.
constexpr std::int64_t monomial_count(std::int64_t d) { return binom(d + 2, 2); }

/// Position of x^a y^b z^c (a = d - b - c) among degree-d monomials.
/// Monomials are ordered by b + c, then by c; x^d comes first.
constexpr std::size_t monomial_index(int b, int c) {
  const int k = b + c;
  return static_cast<std::size_t>(k) * (k + 1) / 2 + c;
}

using Exponent = std::array<int, 3>;

/// All exponent vectors of total degree d, in monomial_index order.
inline std::vector<Exponent> monomials(int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  out.reserve(static_cast<std::size_t>(monomial_count(d)));
  for (int k = 0; k <= d; ++k)
    for (int c = 0; c <= k; ++c) out.push_back({d - k, k - c, c});
  return out;
}

inline std::size_t monomial_index(const Exponent& e) { return monomial_index(e[1], e[2]); }

}  // namespace starspline

#endif  // STARSPLINE_COMBINATORICS_HPP
