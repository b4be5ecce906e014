#include "starspline/face_ideals.hpp"

#include <algorithm>

#include "starspline/combinatorics.hpp"
#include "starspline/error.hpp"

namespace starspline {

namespace {

IntVec3 cross(const IntVec3& u, const IntVec3& v) {
  IntVec3 out;
  out << u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0);
  return out;
}

Integer dot(const IntVec3& u, const IntVec3& v) { return u(0) * v(0) + u(1) * v(1) + u(2) * v(2); }

bool is_zero(const IntVec3& v) { return v(0) == 0 && v(1) == 0 && v(2) == 0; }

std::vector<Integer> powers(const Integer& x, int e) {
  std::vector<Integer> out(static_cast<std::size_t>(e) + 1);
  out[0] = 1;
  for (int i = 1; i <= e; ++i) out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i) - 1] * x;
  return out;
}

// Rank over Q of the degree-j part of the ideal generated by the (r+1)-st
// powers of binary forms alpha X + beta Y.
std::size_t binary_power_rank(const std::vector<std::pair<Integer, Integer>>& forms, int r, int j) {
  if (j <= r) return 0;
  const int e = r + 1;
  std::vector<std::vector<Integer>> gens;
  for (const auto& [alpha, beta] : forms) {
    const auto pa = powers(alpha, e);
    const auto pb = powers(beta, e);
    std::vector<Integer> g(static_cast<std::size_t>(e) + 1);
    for (int i = 0; i <= e; ++i)
      g[static_cast<std::size_t>(i)] = Integer(binom(e, i)) * pa[static_cast<std::size_t>(e - i)] *
                                       pb[static_cast<std::size_t>(i)];
    gens.push_back(std::move(g));
  }
  const int shift = j - e;
  IntegerMatrix m = IntegerMatrix::Zero(static_cast<Eigen::Index>(gens.size()) * (shift + 1), j + 1);
  Eigen::Index row = 0;
  for (const auto& g : gens)
    for (int s = 0; s <= shift; ++s, ++row)
      for (int i = 0; i <= e; ++i) m(row, s + i) = g[static_cast<std::size_t>(i)];
  return rank(m);
}

}  // namespace

bool LinearForm::operator<(const LinearForm& o) const {
  for (int i = 0; i < 3; ++i)
    if (coeffs(i) != o.coeffs(i)) return coeffs(i) < o.coeffs(i);
  return false;
}

LinearForm normalize_form(const Vec3& v) {
  Integer l = 1;
  for (int i = 0; i < 3; ++i) l = mp::lcm(l, mp::denominator(v(i)));
  IntVec3 c;
  for (int i = 0; i < 3; ++i) c(i) = mp::numerator(v(i)) * (l / mp::denominator(v(i)));
  if (is_zero(c)) throw Error(Errc::DegenerateFace, "zero normal vector");
  Integer g = 0;
  for (int i = 0; i < 3; ++i) g = mp::gcd(g, c(i));
  for (int i = 0; i < 3; ++i) c(i) /= g;
  const int lead = c(0) != 0 ? 0 : (c(1) != 0 ? 1 : 2);
  if (c(lead) < 0) c = -c;
  return LinearForm{c};
}

LinearForm face_form(const VertexStar& star, std::size_t face) {
  const auto& f = star.interior_faces().at(face);
  const Vec3& v = star.link_vertices()[f.a];
  const Vec3& w = star.link_vertices()[f.b];
  Vec3 n;
  n << v(1) * w(2) - v(2) * w(1), v(2) * w(0) - v(0) * w(2), v(0) * w(1) - v(1) * w(0);
  if (n(0) == 0 && n(1) == 0 && n(2) == 0)
    throw Error(Errc::DegenerateFace, "face " + std::to_string(face) + " spans no plane");
  return normalize_form(n);
}

std::vector<LinearForm> face_forms(const VertexStar& star) {
  std::vector<LinearForm> out;
  for (std::size_t i = 0; i < star.interior_faces().size(); ++i) out.push_back(face_form(star, i));
  return out;
}

std::vector<LinearForm> distinct_forms(const std::vector<LinearForm>& forms) {
  std::vector<LinearForm> out;
  for (const auto& f : forms)
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  return out;
}

EdgeProfile make_profile(std::int64_t n_tau, std::int64_t distinct_planes, int r,
                         bool use_distinct) {
  EdgeProfile p;
  p.n_tau = n_tau;
  p.distinct_planes = distinct_planes;
  p.t_tau = std::min<std::int64_t>(use_distinct ? distinct_planes : n_tau, r + 2);
  if (p.t_tau < 2)
    throw Error(Errc::InvalidProfile, "an interior edge needs at least two distinct planes");
  const std::int64_t total = p.t_tau * (r + 1);
  p.q_tau = total / (p.t_tau - 1);
  p.a_tau = total - (p.t_tau - 1) * p.q_tau;
  p.b_tau = p.t_tau - 1 - p.a_tau;
  return p;
}

EdgeProfile edge_profile(const VertexStar& star, std::size_t edge, int r, bool use_distinct) {
  const auto& around = star.faces_around_edge(edge);
  std::vector<LinearForm> forms;
  for (std::size_t f : around) forms.push_back(face_form(star, f));
  return make_profile(static_cast<std::int64_t>(around.size()),
                      static_cast<std::int64_t>(distinct_forms(forms).size()), r, use_distinct);
}

std::int64_t dim_J_sigma(int r, int d) { return binom(d + 1 - r, 2); }

std::int64_t dim_J_tau_formula(const EdgeProfile& p, int r, int d) {
  return p.t_tau * binom(d + 1 - r, 2) - p.a_tau * binom(d + 1 - p.q_tau, 2) -
         p.b_tau * binom(d + 2 - p.q_tau, 2);
}

std::vector<Integer> power_coefficients(const IntVec3& form, int e) {
  const auto pa = powers(form(0), e);
  const auto pb = powers(form(1), e);
  const auto pc = powers(form(2), e);
  std::vector<Integer> out(static_cast<std::size_t>(monomial_count(e)));
  for (const auto& m : monomials(e)) {
    const Integer multinomial = Integer(binom(e, m[0])) * Integer(binom(e - m[0], m[1]));
    out[monomial_index(m)] = multinomial * pa[static_cast<std::size_t>(m[0])] *
                             pb[static_cast<std::size_t>(m[1])] * pc[static_cast<std::size_t>(m[2])];
  }
  return out;
}

IntegerMatrix power_ideal_matrix(const std::vector<LinearForm>& forms, int r, int d) {
  const int e = r + 1;
  const int s = d - e;
  const auto cols = static_cast<Eigen::Index>(monomial_count(d));
  if (s < 0) return IntegerMatrix(0, cols);
  const auto shifts = monomials(s);
  const auto terms = monomials(e);
  IntegerMatrix m = IntegerMatrix::Zero(static_cast<Eigen::Index>(forms.size() * shifts.size()), cols);
  Eigen::Index row = 0;
  for (const auto& f : forms) {
    const auto coeffs = power_coefficients(f.coeffs, e);
    for (const auto& sh : shifts) {
      for (std::size_t t = 0; t < terms.size(); ++t) {
        if (coeffs[t] == 0) continue;
        const Exponent ex{terms[t][0] + sh[0], terms[t][1] + sh[1], terms[t][2] + sh[2]};
        m(row, static_cast<Eigen::Index>(monomial_index(ex))) = coeffs[t];
      }
      ++row;
    }
  }
  return m;
}

std::size_t dim_power_ideal_exact(const std::vector<LinearForm>& forms, int r, int d) {
  if (d <= r || forms.empty()) return 0;
  const auto distinct = distinct_forms(forms);
  IntegerMatrix m = power_ideal_matrix(distinct, r, d);
  remove_row_content(m);
  return certified_rank(m).rank;
}

std::size_t dim_J_tau_exact(const VertexStar& star, std::size_t edge, int r, int d) {
  if (d <= r) return 0;
  std::vector<LinearForm> forms;
  for (std::size_t f : star.faces_around_edge(edge)) forms.push_back(face_form(star, f));
  forms = distinct_forms(forms);
  if (forms.size() == 1) return static_cast<std::size_t>(binom(d + 1 - r, 2));

  // All forms vanish on the edge direction, so they lie in the span of two
  // of them, u and w. In coordinates (u, w, z') the ideal is extended from a
  // binary power ideal and its degree-d part splits by the z' exponent.
  const IntVec3& u = forms[0].coeffs;
  const IntVec3& w = forms[1].coeffs;
  const IntVec3 uw = cross(u, w);
  const Integer norm = dot(uw, uw);
  std::vector<std::pair<Integer, Integer>> binary;
  for (const auto& f : forms) {
    const Integer alpha = dot(cross(f.coeffs, w), uw);
    const Integer beta = dot(cross(u, f.coeffs), uw);
    if (alpha * u + beta * w != norm * f.coeffs)
      throw std::logic_error("dim_J_tau_exact: forms around an edge are not coaxial");
    binary.emplace_back(alpha, beta);
  }
  std::size_t total = 0;
  for (int j = r + 1; j <= d; ++j) total += binary_power_rank(binary, r, j);
  return total;
}

std::size_t dim_J_gamma_exact(const VertexStar& star, int r, int d) {
  if (!star.closed()) throw Error(Errc::NotClosed, "J(gamma) needs a closed star");
  return dim_power_ideal_exact(face_forms(star), r, d);
}

bool is_gamma_full(const VertexStar& star, int r, int d) {
  return static_cast<std::int64_t>(dim_J_gamma_exact(star, r, d)) == monomial_count(d);
}

}  // namespace starspline
