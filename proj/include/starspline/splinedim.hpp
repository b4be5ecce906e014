#ifndef STARSPLINE_SPLINEDIM_HPP
#define STARSPLINE_SPLINEDIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "starspline/starmesh.hpp"

namespace starspline {

/// Smoothness constraints on piecewise degree-d forms. Columns index
/// (cell, monomial) pairs, cell-major; for each interior face between cells
/// c0 < c1 the rows are the coefficients of F|c1 - F|c0 on the monomials of
/// the face-adapted basis whose face-form exponent is at most r.
struct CofactorSystem {
  int r = 0;
  int d = 0;
  std::size_t cells = 0;
  IntegerMatrix matrix;
};

CofactorSystem build_system(const VertexStar& star, int r, int d);

/// Cofactor syzygies around interior edges. Columns index (interior face,
/// degree-(d-r-1) monomial), rows index (interior edge, degree-d monomial);
/// the kernel is the space of smoothing cofactors, so
/// homog_dim = C(d+2,2) + kernel dimension.
IntegerMatrix build_syzygy_system(const VertexStar& star, int r, int d);

/// Lower bound on dim H^r_d valid for this particular star:
/// C(d+2,2) + max(0, chi(J, d), C(d+1-r,2) if some plane of interior faces
/// splits the star in two).
std::int64_t proven_homog_lower_bound(const VertexStar& star, int r, int d);

enum class DimProof {
  Trivial,      // d <= r, or no constraints
  LowerBound,   // a modular kernel met proven_homog_lower_bound
  Independent,  // rank certified without a lower bound
  Unfinished,   // prime budget exhausted; the value is an upper bound
};

struct HomogDim {
  std::size_t value = 0;
  DimProof proof = DimProof::Trivial;
  std::size_t primes = 0;
};

struct HomogOptions {
  bool use_lower_bound = true;
  std::size_t max_primes = 0;  // 0: unlimited
};

HomogDim homog_dim_certified(const VertexStar& star, int r, int d, const HomogOptions& options = {});

/// Exact dim H^r_d.
std::size_t homog_dim(const VertexStar& star, int r, int d);

/// Kernel dimension of build_system, certified independently.
std::size_t homog_dim_cells(const VertexStar& star, int r, int d);

/// Sum of homog_dim over degrees 0..d.
std::size_t spline_dim(const VertexStar& star, int r, int d);

enum class GenericState { Certified, Bounded, Unknown };

std::string to_string(GenericState state);

struct GenericDim {
  std::size_t value = 0;
  GenericState state = GenericState::Unknown;
  std::int64_t proven_lower = 0;           // Theorem-style bound for the combinatorial type
  std::vector<std::uint64_t> seeds;        // seed actually used per trial run
  std::vector<std::size_t> trial_values;   // homog_dim per trial run
  std::size_t trials_skipped = 0;          // trials not run once the value was certified
};

struct GenericOptions {
  std::uint64_t denominator_scale = 1000;
  FrozenMask frozen;
  std::size_t max_primes = 0;
};

/// Minimum of homog_dim over seeded perturbations; trial i uses seed + i.
/// Certified when the minimum equals homog_lower_bound's best_lower (for
/// closed stars); remaining trials are then skipped since they cannot go
/// lower.
GenericDim generic_homog_dim(const VertexStar& star, int r, int d, int trials, std::uint64_t seed,
                             const GenericOptions& options = {});

/// homog_dim == C(d+2,2) for every d <= d_gamma. Throws Error(NotClosed).
bool whiteley_check(const VertexStar& star, int r);

}  // namespace starspline

#endif  // STARSPLINE_SPLINEDIM_HPP
