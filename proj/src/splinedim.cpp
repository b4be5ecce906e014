#include "starspline/splinedim.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "starspline/bounds.hpp"
#include "starspline/combinatorics.hpp"
#include "starspline/error.hpp"
#include "starspline/face_ideals.hpp"

namespace starspline {

namespace {

std::vector<Integer> powers(const Integer& x, int e) {
  std::vector<Integer> out(static_cast<std::size_t>(std::max(e, 0)) + 1);
  out[0] = 1;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = out[i - 1] * x;
  return out;
}

// Rows: coefficients of c_k^d * P in the basis (u, w, l) restricted to
// l-exponent <= r, where l is the face form, k its largest coefficient and
// u, w the remaining coordinates. Columns: degree-d monomials of P.
IntegerMatrix face_constraint_block(const IntVec3& form, int r, int d) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (mp::abs(form(i)) > mp::abs(form(k))) k = i;
  const int iu = k == 0 ? 1 : 0;
  const int iw = k == 2 ? 1 : 2;
  const auto all = monomials(d);
  // Row numbering over (u, w, l) exponents with l-exponent <= r.
  std::vector<std::ptrdiff_t> row_of(all.size(), -1);
  std::ptrdiff_t rows = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i][2] <= r) row_of[i] = rows++;
  IntegerMatrix block = IntegerMatrix::Zero(rows, static_cast<Eigen::Index>(all.size()));
  const auto ck = powers(form(k), d);
  const auto cu = powers(-form(iu), d);
  const auto cw = powers(-form(iw), d);
  for (std::size_t col = 0; col < all.size(); ++col) {
    const auto& alpha = all[col];
    const int n = alpha[static_cast<std::size_t>(k)];
    const int aw = alpha[static_cast<std::size_t>(iw)];
    // x_k^n = c_k^-n (l - c_u u - c_w w)^n
    for (int e = 0; e <= std::min(n, r); ++e)
      for (int p = 0; p <= n - e; ++p) {
        const int q = n - e - p;
        const Integer coeff = Integer(binom(n, e)) * Integer(binom(n - e, p)) *
                              cu[static_cast<std::size_t>(p)] * cw[static_cast<std::size_t>(q)] *
                              ck[static_cast<std::size_t>(d - n)];
        if (coeff == 0) continue;
        const std::size_t target = monomial_index(aw + q, e);  // (u, w, l) = (a, b, c)
        block(row_of[target], static_cast<Eigen::Index>(col)) += coeff;
      }
  }
  return block;
}

bool splits_star(const VertexStar& star, const std::vector<LinearForm>& forms, const LinearForm& plane) {
  const std::size_t n = star.cell_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t f = 0; f < forms.size(); ++f) {
    if (forms[f] == plane) continue;
    const auto& cells = star.interior_faces()[f].cells;
    parent[find(cells[0])] = find(cells[1]);
  }
  for (std::size_t c = 1; c < n; ++c)
    if (find(c) != find(0)) return true;
  return false;
}

}  // namespace

CofactorSystem build_system(const VertexStar& star, int r, int d) {
  CofactorSystem sys;
  sys.r = r;
  sys.d = d;
  sys.cells = star.cell_count();
  const auto N = static_cast<Eigen::Index>(monomial_count(d));
  const auto forms = face_forms(star);
  std::vector<IntegerMatrix> blocks;
  Eigen::Index rows = 0;
  for (const auto& f : forms) {
    blocks.push_back(face_constraint_block(f.coeffs, r, d));
    rows += blocks.back().rows();
  }
  sys.matrix = IntegerMatrix::Zero(rows, static_cast<Eigen::Index>(sys.cells) * N);
  Eigen::Index row = 0;
  for (std::size_t f = 0; f < forms.size(); ++f) {
    const auto& cells = star.interior_faces()[f].cells;
    const auto& b = blocks[f];
    sys.matrix.block(row, static_cast<Eigen::Index>(cells[1]) * N, b.rows(), N) = b;
    sys.matrix.block(row, static_cast<Eigen::Index>(cells[0]) * N, b.rows(), N) = -b;
    row += b.rows();
  }
  return sys;
}

IntegerMatrix build_syzygy_system(const VertexStar& star, int r, int d) {
  const int s = d - r - 1;
  const auto Nd = static_cast<Eigen::Index>(monomial_count(d));
  const auto Ns = static_cast<Eigen::Index>(monomial_count(s));
  const auto f1 = static_cast<Eigen::Index>(star.interior_edges().size());
  const auto f2 = static_cast<Eigen::Index>(star.interior_faces().size());
  IntegerMatrix m = IntegerMatrix::Zero(f1 * Nd, f2 * Ns);
  if (s < 0) return m;
  const auto shifts = monomials(s);
  const auto terms = monomials(r + 1);
  const auto& edges = star.interior_edges();
  for (Eigen::Index f = 0; f < f2; ++f) {
    const auto& face = star.interior_faces()[static_cast<std::size_t>(f)];
    const auto coeffs = power_coefficients(face_form(star, static_cast<std::size_t>(f)).coeffs, r + 1);
    for (std::size_t e : star.edges_of_face(static_cast<std::size_t>(f))) {
      const bool positive = edges[e] == face.a;
      for (std::size_t si = 0; si < shifts.size(); ++si) {
        const Eigen::Index col = f * Ns + static_cast<Eigen::Index>(si);
        for (std::size_t t = 0; t < terms.size(); ++t) {
          if (coeffs[t] == 0) continue;
          const Exponent ex{terms[t][0] + shifts[si][0], terms[t][1] + shifts[si][1],
                            terms[t][2] + shifts[si][2]};
          const Eigen::Index row = static_cast<Eigen::Index>(e) * Nd +
                                   static_cast<Eigen::Index>(monomial_index(ex));
          m(row, col) = positive ? coeffs[t] : Integer(-coeffs[t]);
        }
      }
    }
  }
  return m;
}

std::int64_t proven_homog_lower_bound(const VertexStar& star, int r, int d) {
  const std::int64_t trivial = binom(d + 2, 2);
  std::int64_t extra = std::max<std::int64_t>(0, euler_char_J(star, r, d, true));
  const std::int64_t split = binom(d + 1 - r, 2);
  if (split > extra) {
    const auto forms = face_forms(star);
    for (const auto& plane : distinct_forms(forms))
      if (splits_star(star, forms, plane)) {
        extra = split;
        break;
      }
  }
  return trivial + extra;
}

HomogDim homog_dim_certified(const VertexStar& star, int r, int d, const HomogOptions& options) {
  const std::int64_t trivial = binom(d + 2, 2);
  HomogDim out;
  if (d - r - 1 < 0 || star.interior_faces().empty()) {
    out.value = static_cast<std::size_t>(trivial);
    return out;
  }
  IntegerMatrix m = build_syzygy_system(star, r, d);
  remove_row_content(m);
  const auto cols = static_cast<std::size_t>(m.cols());
  RankOptions ropts;
  ropts.max_primes = options.max_primes;
  if (options.use_lower_bound) {
    const std::int64_t extra = proven_homog_lower_bound(star, r, d) - trivial;
    if (extra > static_cast<std::int64_t>(cols))
      throw std::logic_error("homog_dim: lower bound exceeds the number of cofactor unknowns");
    ropts.upper_bound = cols - static_cast<std::size_t>(extra);
  }
  const CertifiedRank cr = certified_rank(m, ropts);
  out.value = static_cast<std::size_t>(trivial) + cols - cr.rank;
  out.primes = cr.primes;
  switch (cr.proof) {
    case RankProof::KnownBound: out.proof = DimProof::LowerBound; break;
    case RankProof::FullRank:
    case RankProof::Hadamard: out.proof = DimProof::Independent; break;
    case RankProof::Unfinished: out.proof = DimProof::Unfinished; break;
  }
  return out;
}

std::size_t homog_dim(const VertexStar& star, int r, int d) {
  return homog_dim_certified(star, r, d).value;
}

std::size_t homog_dim_cells(const VertexStar& star, int r, int d) {
  const CofactorSystem sys = build_system(star, r, d);
  IntegerMatrix m = sys.matrix;
  remove_row_content(m);
  return static_cast<std::size_t>(m.cols()) - certified_rank(m).rank;
}

std::size_t spline_dim(const VertexStar& star, int r, int d) {
  std::size_t total = 0;
  for (int i = 0; i <= d; ++i) total += homog_dim(star, r, i);
  return total;
}

std::string to_string(GenericState state) {
  switch (state) {
    case GenericState::Certified: return "certified";
    case GenericState::Bounded: return "bounded";
    case GenericState::Unknown: return "unknown";
  }
  return "unknown";
}

GenericDim generic_homog_dim(const VertexStar& star, int r, int d, int trials, std::uint64_t seed,
                             const GenericOptions& options) {
  if (trials < 1) throw Error(Errc::InvalidInput, "trials must be at least 1");
  GenericDim out;
  out.proven_lower = star.closed() ? homog_lower_bound(star, r, d).best_lower
                                   : std::max(binom(d + 2, 2), lbos(star, r, d));
  bool have = false;
  bool exact = false;
  for (int t = 0; t < trials; ++t) {
    if (have && exact && static_cast<std::int64_t>(out.value) == out.proven_lower) {
      out.trials_skipped = static_cast<std::size_t>(trials - t);
      break;
    }
    const auto [trial, used] = perturb_with_retry(star, seed + static_cast<std::uint64_t>(t),
                                                  options.denominator_scale, options.frozen);
    HomogOptions hopts;
    hopts.max_primes = options.max_primes;
    const HomogDim h = homog_dim_certified(trial, r, d, hopts);
    out.seeds.push_back(used);
    out.trial_values.push_back(h.value);
    const bool trial_exact = h.proof != DimProof::Unfinished;
    if (!have || h.value < out.value || (h.value == out.value && trial_exact && !exact)) {
      out.value = h.value;
      exact = trial_exact;
      have = true;
    }
  }
  if (static_cast<std::int64_t>(out.value) == out.proven_lower)
    out.state = GenericState::Certified;
  else
    out.state = exact ? GenericState::Bounded : GenericState::Unknown;
  return out;
}

bool whiteley_check(const VertexStar& star, int r) {
  if (!star.closed()) throw Error(Errc::NotClosed, "whiteley_check needs a closed star");
  const std::int64_t D = d_gamma(static_cast<std::int64_t>(star.interior_edges().size()), r);
  for (int d = 0; d <= D; ++d)
    if (static_cast<std::int64_t>(homog_dim(star, r, d)) != binom(d + 2, 2)) return false;
  return true;
}

}  // namespace starspline
