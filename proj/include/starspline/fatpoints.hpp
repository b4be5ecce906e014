#ifndef STARSPLINE_FATPOINTS_HPP
#define STARSPLINE_FATPOINTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starspline/face_ideals.hpp"

namespace starspline {

/// [a : b : c] with coprime integers, first nonzero positive.
using ProjectivePoint = LinearForm;

struct DualLine {
  LinearForm form;                  // the line {P : form . P = 0}
  std::vector<std::size_t> points;  // incident configuration points, ascending
};

struct FatPointConfig {
  std::vector<ProjectivePoint> points;
  std::vector<DualLine> lines;
  std::vector<std::size_t> face_to_point;  // per interior face
  std::vector<std::size_t> edge_to_line;   // per interior edge
};

/// Points dual to the interior face planes and lines dual to the interior
/// edges, both deduplicated. Throws Error(NotClosed).
FatPointConfig dual_config(const VertexStar& star);

/// Configuration of bare points (no lines).
FatPointConfig point_config(const std::vector<ProjectivePoint>& points);

/// One "p a b c" line per point and one "l a b c : i j ..." line per line.
std::string format_config(const FatPointConfig& config);

struct ReductionVector {
  std::vector<std::size_t> line_sequence;
  std::vector<std::int64_t> entries;
  std::vector<std::int64_t> residuals;
};

/// Walk the line sequence; each step records the sum of the current
/// multiplicities on the line and lowers every positive one by 1.
ReductionVector reduce(const FatPointConfig& config, const std::vector<std::int64_t>& multiplicities,
                       const std::vector<std::size_t>& line_sequence);

/// All residual multiplicities are zero.
bool is_full(const ReductionVector& rv);

/// (max(0, h'_0..h'_n), C(d-n+2,2) + sum_{i<n} C(d-i-d_{i+1}+1,1)).
/// Throws Error(NotFull).
std::pair<std::int64_t, std::int64_t> cht_dim_bounds(const ReductionVector& rv, int d);

/// (n + min(0, min_i (d_i - (n-i+1))), n). Throws Error(NotFull) or
/// Error(NotPositive).
std::pair<std::int64_t, std::int64_t> alpha_bound(const ReductionVector& rv);

/// The lines in order, repeated s times, on uniform multiplicity 2s.
/// Throws Error(ConfigNotRegular) unless every point lies on exactly 2 lines.
ReductionVector canonical_reduction(const FatPointConfig& config, int s);

/// min(f1 / 2, 3) with f1 the number of interior edges.
/// Throws Error(ConfigNotRegular) as canonical_reduction.
Rational waldschmidt_lower(const FatPointConfig& config);

/// (alpha + 1) / 2.
Rational chudnovsky_lower(std::int64_t alpha);

/// Smallest integer strictly above M r / (M - 1). Throws
/// Error(BoundNotAboveOne) unless M > 1.
std::int64_t fullness_degree(const Rational& waldschmidt_lb, int r);

/// Dimension of the degree-d forms vanishing to order m_i at point i.
std::size_t fatpoint_dim_exact(const FatPointConfig& config,
                               const std::vector<std::int64_t>& multiplicities, int d);

/// Least degree of a nonzero form in the uniform symbolic power I^(s).
std::int64_t symbolic_alpha(const FatPointConfig& config, int s);

/// alpha(I^(s)) / s for s = 1..s_max.
std::vector<Rational> waldschmidt_estimate(const FatPointConfig& config, int s_max);

}  // namespace starspline

#endif  // STARSPLINE_FATPOINTS_HPP
