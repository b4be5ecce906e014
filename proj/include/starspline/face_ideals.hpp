#ifndef STARSPLINE_FACE_IDEALS_HPP
#define STARSPLINE_FACE_IDEALS_HPP

#include <cstdint>
#include <vector>

#include "starspline/starmesh.hpp"

namespace starspline {

/// a x + b y + c z with coprime integer coefficients, first nonzero positive.
struct LinearForm {
  IntVec3 coeffs = IntVec3::Zero();
  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
  bool operator<(const LinearForm& o) const;
};

/// Canonical representative of the plane orthogonal to v. Throws
/// Error(DegenerateFace) for the zero vector.
LinearForm normalize_form(const Vec3& v);

/// Form of the interior face (index into star.interior_faces()).
LinearForm face_form(const VertexStar& star, std::size_t face);
std::vector<LinearForm> face_forms(const VertexStar& star);

/// Pairwise non-proportional forms, in first-occurrence order.
std::vector<LinearForm> distinct_forms(const std::vector<LinearForm>& forms);

struct EdgeProfile {
  std::int64_t n_tau = 0;
  std::int64_t distinct_planes = 0;
  std::int64_t t_tau = 0;
  std::int64_t q_tau = 0;
  std::int64_t a_tau = 0;
  std::int64_t b_tau = 0;
};

/// Profile with t = min(n_used, r + 2). Throws Error(InvalidProfile) when t < 2.
EdgeProfile make_profile(std::int64_t n_tau, std::int64_t distinct_planes, int r,
                         bool use_distinct);

/// Profile of an interior edge (index into star.interior_edges()).
EdgeProfile edge_profile(const VertexStar& star, std::size_t edge, int r, bool use_distinct);

std::int64_t dim_J_sigma(int r, int d);
std::int64_t dim_J_tau_formula(const EdgeProfile& profile, int r, int d);

/// Coefficients of form^e over the degree-e monomials (monomial_index order).
std::vector<Integer> power_coefficients(const IntVec3& form, int e);

/// Rows: form^(r+1) times each degree-(d-r-1) monomial, over degree-d monomials.
IntegerMatrix power_ideal_matrix(const std::vector<LinearForm>& forms, int r, int d);

/// dim of the degree-d part of the ideal generated by the (r+1)-st powers.
std::size_t dim_power_ideal_exact(const std::vector<LinearForm>& forms, int r, int d);

std::size_t dim_J_tau_exact(const VertexStar& star, std::size_t edge, int r, int d);

/// Throws Error(NotClosed) for open stars.
std::size_t dim_J_gamma_exact(const VertexStar& star, int r, int d);
bool is_gamma_full(const VertexStar& star, int r, int d);

}  // namespace starspline

#endif  // STARSPLINE_FACE_IDEALS_HPP
