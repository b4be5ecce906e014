#ifndef STARSPLINE_BOUNDS_HPP
#define STARSPLINE_BOUNDS_HPP

#include <cstdint>
#include <utility>

#include "starspline/face_ideals.hpp"

namespace starspline {

/// Degree threshold: 2r for 4 interior edges, floor((5r+2)/3) for 5,
/// floor((3r+1)/2) for 6 or more. Throws Error(TooFewEdges) below 4.
std::int64_t d_gamma(std::int64_t f1_interior, int r);

/// Closed-star lower bound 2 C(d+2,2) + (f2 - sum t) C(d+1-r,2)
///   + sum (a C(d+1-q,2) + b C(d+2-q,2)). Throws Error(NotClosed).
std::int64_t lbcs(const VertexStar& star, int r, int d, bool use_distinct = false);

/// Open-star lower bound: as lbcs with C(d+2,2) once. Throws Error(NotOpen).
std::int64_t lbos(const VertexStar& star, int r, int d);

/// lbcs written through f1 only:
///   (d-r)(d-2r) f1 - 2d^2 + 6dr - 3r^2 + 3r + 2 + sum_tau sum_{j=1}^{d-r} [r+j+1-n_tau j]_+.
/// Evaluated for every d. It agrees with lbcs only for d >= r.
std::int64_t lbcs_closed_form(const VertexStar& star, int r, int d);

/// sum_sigma dim J(sigma)_d - sum_tau dim J(tau)_d + dim J(gamma)_d. The
/// exact variant uses rank computations for J(tau) and J(gamma); the formula
/// variant uses distinct-plane profiles and C(d+2,2) [d > D_gamma]. Open
/// stars have no J(gamma) term.
std::int64_t euler_char_J(const VertexStar& star, int r, int d, bool exact);

struct BoundReport {
  int r = 0;
  int d = 0;
  std::int64_t trivial_dim = 0;
  std::int64_t lbcs = 0;
  std::int64_t d_gamma = 0;
  bool applicable = false;
  std::int64_t best_lower = 0;
};

BoundReport homog_lower_bound(const VertexStar& star, int r, int d);

/// C(D+3,3) + sum_{i=D+1}^{d} (apply_max ? max(C(i+2,2), lbcs(i)) : lbcs(i)),
/// D = d_gamma. Throws Error(DegreeTooSmall) when d < D.
std::int64_t spline_lower_bound(const VertexStar& star, int r, int d, bool apply_max);

struct HomologyDims {
  std::int64_t h2 = 0;
  std::int64_t h1 = 0;
};

/// H2 = homog_dim - C(d+2,2), H1 = H2 - euler_char_J(exact).
HomologyDims homology_dims(const VertexStar& star, int r, int d);
/// Same, from an already computed homogeneous dimension.
HomologyDims homology_dims(const VertexStar& star, int r, int d, std::int64_t homog_dim);

}  // namespace starspline

#endif  // STARSPLINE_BOUNDS_HPP
