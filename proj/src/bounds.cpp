#include "starspline/bounds.hpp"

#include <algorithm>

#include "starspline/combinatorics.hpp"
#include "starspline/error.hpp"
#include "starspline/splinedim.hpp"

namespace starspline {

namespace {

// Edge terms shared by lbcs and lbos:
// (f2 - sum t) C(d+1-r,2) + sum (a C(d+1-q,2) + b C(d+2-q,2)).
std::int64_t edge_terms(const VertexStar& star, int r, int d, bool use_distinct) {
  std::int64_t sum_t = 0;
  std::int64_t tail = 0;
  for (std::size_t e = 0; e < star.interior_edges().size(); ++e) {
    const EdgeProfile p = edge_profile(star, e, r, use_distinct);
    sum_t += p.t_tau;
    tail += p.a_tau * binom(d + 1 - p.q_tau, 2) + p.b_tau * binom(d + 2 - p.q_tau, 2);
  }
  const auto f2 = static_cast<std::int64_t>(star.interior_faces().size());
  return (f2 - sum_t) * binom(d + 1 - r, 2) + tail;
}

}  // namespace

std::int64_t d_gamma(std::int64_t f1_interior, int r) {
  if (f1_interior < 4)
    throw Error(Errc::TooFewEdges, "a closed star has at least 4 interior edges");
  if (f1_interior == 4) return 2 * r;
  if (f1_interior == 5) return (5 * r + 2) / 3;
  return (3 * r + 1) / 2;
}

std::int64_t lbcs(const VertexStar& star, int r, int d, bool use_distinct) {
  if (!star.closed()) throw Error(Errc::NotClosed, "lbcs needs a closed star");
  return 2 * binom(d + 2, 2) + edge_terms(star, r, d, use_distinct);
}

std::int64_t lbos(const VertexStar& star, int r, int d) {
  if (star.closed()) throw Error(Errc::NotOpen, "lbos needs an open star");
  return binom(d + 2, 2) + edge_terms(star, r, d, false);
}

std::int64_t lbcs_closed_form(const VertexStar& star, int r, int d) {
  if (!star.closed()) throw Error(Errc::NotClosed, "lbcs_closed_form needs a closed star");
  const auto f1 = static_cast<std::int64_t>(star.interior_edges().size());
  const std::int64_t D = d, R = r;
  std::int64_t sigma = 0;
  for (std::size_t e = 0; e < star.interior_edges().size(); ++e) {
    const auto n = static_cast<std::int64_t>(star.faces_around_edge(e).size());
    for (std::int64_t j = 1; j <= D - R; ++j) sigma += std::max<std::int64_t>(0, R + j + 1 - n * j);
  }
  return (D - R) * (D - 2 * R) * f1 - 2 * D * D + 6 * D * R - 3 * R * R + 3 * R + 2 + sigma;
}

std::int64_t euler_char_J(const VertexStar& star, int r, int d, bool exact) {
  const auto f2 = static_cast<std::int64_t>(star.interior_faces().size());
  std::int64_t chi = f2 * dim_J_sigma(r, d);
  for (std::size_t e = 0; e < star.interior_edges().size(); ++e)
    chi -= exact ? static_cast<std::int64_t>(dim_J_tau_exact(star, e, r, d))
                 : dim_J_tau_formula(edge_profile(star, e, r, true), r, d);
  if (star.closed()) {
    if (exact) {
      chi += static_cast<std::int64_t>(dim_J_gamma_exact(star, r, d));
    } else if (d > d_gamma(static_cast<std::int64_t>(star.interior_edges().size()), r)) {
      chi += binom(d + 2, 2);
    }
  }
  return chi;
}

BoundReport homog_lower_bound(const VertexStar& star, int r, int d) {
  BoundReport rep;
  rep.r = r;
  rep.d = d;
  rep.trivial_dim = binom(d + 2, 2);
  rep.lbcs = lbcs(star, r, d, false);
  rep.d_gamma = d_gamma(static_cast<std::int64_t>(star.interior_edges().size()), r);
  rep.applicable = d > rep.d_gamma;
  rep.best_lower = rep.applicable ? std::max(rep.trivial_dim, rep.lbcs) : rep.trivial_dim;
  return rep;
}

std::int64_t spline_lower_bound(const VertexStar& star, int r, int d, bool apply_max) {
  if (!star.closed()) throw Error(Errc::NotClosed, "spline_lower_bound needs a closed star");
  const std::int64_t D = d_gamma(static_cast<std::int64_t>(star.interior_edges().size()), r);
  if (d < D) throw Error(Errc::DegreeTooSmall, "degree below the threshold D_gamma");
  std::int64_t total = binom(D + 3, 3);
  for (std::int64_t i = D + 1; i <= d; ++i) {
    const std::int64_t lb = lbcs(star, r, static_cast<int>(i), false);
    total += apply_max ? std::max(binom(i + 2, 2), lb) : lb;
  }
  return total;
}

HomologyDims homology_dims(const VertexStar& star, int r, int d, std::int64_t homog) {
  if (!star.closed()) throw Error(Errc::NotClosed, "homology_dims needs a closed star");
  HomologyDims out;
  out.h2 = homog - binom(d + 2, 2);
  out.h1 = out.h2 - euler_char_J(star, r, d, true);
  return out;
}

HomologyDims homology_dims(const VertexStar& star, int r, int d) {
  if (!star.closed()) throw Error(Errc::NotClosed, "homology_dims needs a closed star");
  return homology_dims(star, r, d, static_cast<std::int64_t>(homog_dim(star, r, d)));
}

}  // namespace starspline
