#include "starspline/fatpoints.hpp"

#include <algorithm>
#include <sstream>

#include "starspline/combinatorics.hpp"
#include "starspline/error.hpp"

namespace starspline {

namespace {

Integer dot(const IntVec3& u, const IntVec3& v) { return u(0) * v(0) + u(1) * v(1) + u(2) * v(2); }

void require_regular(const FatPointConfig& config) {
  std::vector<int> on(config.points.size(), 0);
  for (const auto& line : config.lines)
    for (std::size_t p : line.points) ++on[p];
  for (std::size_t p = 0; p < on.size(); ++p)
    if (on[p] != 2)
      throw Error(Errc::ConfigNotRegular,
                  "point " + std::to_string(p) + " lies on " + std::to_string(on[p]) + " lines");
}

Integer falling(int a, int k) {
  Integer out = 1;
  for (int i = 0; i < k; ++i) out *= a - i;
  return out;
}

}  // namespace

FatPointConfig dual_config(const VertexStar& star) {
  if (!star.closed()) throw Error(Errc::NotClosed, "the dual configuration needs a closed star");
  FatPointConfig config;
  for (const auto& form : face_forms(star)) {
    auto it = std::find(config.points.begin(), config.points.end(), form);
    config.face_to_point.push_back(static_cast<std::size_t>(it - config.points.begin()));
    if (it == config.points.end()) config.points.push_back(form);
  }
  for (std::size_t v : star.interior_edges()) {
    const LinearForm form = normalize_form(star.link_vertices()[v]);
    auto it = std::find_if(config.lines.begin(), config.lines.end(),
                           [&](const DualLine& l) { return l.form == form; });
    config.edge_to_line.push_back(static_cast<std::size_t>(it - config.lines.begin()));
    if (it == config.lines.end()) {
      DualLine line{form, {}};
      for (std::size_t p = 0; p < config.points.size(); ++p)
        if (dot(form.coeffs, config.points[p].coeffs) == 0) line.points.push_back(p);
      config.lines.push_back(std::move(line));
    }
  }
  return config;
}

FatPointConfig point_config(const std::vector<ProjectivePoint>& points) {
  FatPointConfig config;
  config.points = points;
  return config;
}

std::string format_config(const FatPointConfig& config) {
  std::ostringstream out;
  for (const auto& p : config.points)
    out << "p " << p.coeffs(0) << ' ' << p.coeffs(1) << ' ' << p.coeffs(2) << '\n';
  for (const auto& l : config.lines) {
    out << "l " << l.form.coeffs(0) << ' ' << l.form.coeffs(1) << ' ' << l.form.coeffs(2) << " :";
    for (std::size_t p : l.points) out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

ReductionVector reduce(const FatPointConfig& config, const std::vector<std::int64_t>& multiplicities,
                       const std::vector<std::size_t>& line_sequence) {
  if (multiplicities.size() != config.points.size())
    throw Error(Errc::InvalidInput, "one multiplicity per point is required");
  ReductionVector rv;
  rv.line_sequence = line_sequence;
  rv.residuals = multiplicities;
  for (std::int64_t m : multiplicities)
    if (m < 0) throw Error(Errc::InvalidInput, "multiplicities must be non-negative");
  for (std::size_t l : line_sequence) {
    if (l >= config.lines.size()) throw Error(Errc::InvalidInput, "line index out of range");
    std::int64_t total = 0;
    for (std::size_t p : config.lines[l].points) {
      total += rv.residuals[p];
      if (rv.residuals[p] > 0) --rv.residuals[p];
    }
    rv.entries.push_back(total);
  }
  return rv;
}

bool is_full(const ReductionVector& rv) {
  return std::all_of(rv.residuals.begin(), rv.residuals.end(), [](std::int64_t m) { return m == 0; });
}

std::pair<std::int64_t, std::int64_t> cht_dim_bounds(const ReductionVector& rv, int d) {
  if (!is_full(rv)) throw Error(Errc::NotFull, "the reduction leaves positive multiplicities");
  const auto n = static_cast<std::int64_t>(rv.entries.size());
  std::int64_t lower = std::max<std::int64_t>(0, binom(d - n + 2, 2));
  std::int64_t tail = 0;  // sum_{j > i} d_j
  for (std::int64_t i = n - 1; i >= 0; --i) {
    tail += rv.entries[static_cast<std::size_t>(i)];
    lower = std::max(lower, binom(d - i + 2, 2) - tail);
  }
  std::int64_t upper = binom(d - n + 2, 2);
  for (std::int64_t i = 0; i < n; ++i)
    upper += binom(d - i - rv.entries[static_cast<std::size_t>(i)] + 1, 1);
  return {lower, upper};
}

std::pair<std::int64_t, std::int64_t> alpha_bound(const ReductionVector& rv) {
  if (!is_full(rv)) throw Error(Errc::NotFull, "the reduction leaves positive multiplicities");
  for (std::int64_t e : rv.entries)
    if (e <= 0) throw Error(Errc::NotPositive, "the reduction vector has a zero entry");
  const auto n = static_cast<std::int64_t>(rv.entries.size());
  std::int64_t low = 0;
  for (std::int64_t i = 1; i <= n; ++i)
    low = std::min(low, rv.entries[static_cast<std::size_t>(i - 1)] - (n - i + 1));
  return {n + low, n};
}

ReductionVector canonical_reduction(const FatPointConfig& config, int s) {
  if (s < 1) throw Error(Errc::InvalidInput, "s must be positive");
  require_regular(config);
  std::vector<std::size_t> sequence;
  for (int k = 0; k < s; ++k)
    for (std::size_t l = 0; l < config.lines.size(); ++l) sequence.push_back(l);
  return reduce(config, std::vector<std::int64_t>(config.points.size(), 2 * s), sequence);
}

Rational waldschmidt_lower(const FatPointConfig& config) {
  require_regular(config);
  const Rational half(Integer(config.edge_to_line.size()), Integer(2));
  return std::min(half, Rational(3));
}

Rational chudnovsky_lower(std::int64_t alpha) { return Rational(Integer(alpha + 1), Integer(2)); }

std::int64_t fullness_degree(const Rational& m, int r) {
  if (m <= 1) throw Error(Errc::BoundNotAboveOne, "the Waldschmidt bound must exceed 1");
  const Rational threshold = m * r / (m - 1);
  // The threshold is non-negative, so truncation is the floor.
  const Integer floor_value = mp::numerator(threshold) / mp::denominator(threshold);
  return static_cast<std::int64_t>(floor_value) + 1;
}

std::size_t fatpoint_dim_exact(const FatPointConfig& config,
                               const std::vector<std::int64_t>& multiplicities, int d) {
  if (multiplicities.size() != config.points.size())
    throw Error(Errc::InvalidInput, "one multiplicity per point is required");
  if (d < 0) return 0;
  const auto cols = monomials(d);
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    if (multiplicities[i] <= 0) continue;
    // Vanishing to order m at P is equivalent to all partials of order m-1
    // vanishing at P (Euler's relation); of order d when m-1 exceeds d.
    const int k = static_cast<int>(std::min<std::int64_t>(multiplicities[i] - 1, d));
    const IntVec3& P = config.points[i].coeffs;
    std::vector<std::vector<Integer>> pw(3);
    for (int c = 0; c < 3; ++c) {
      pw[static_cast<std::size_t>(c)].assign(static_cast<std::size_t>(d) + 1, Integer(1));
      for (int e = 1; e <= d; ++e)
        pw[static_cast<std::size_t>(c)][static_cast<std::size_t>(e)] =
            pw[static_cast<std::size_t>(c)][static_cast<std::size_t>(e) - 1] * P(c);
    }
    for (const auto& beta : monomials(k)) {
      std::vector<Integer> row(cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& alpha = cols[j];
        if (alpha[0] < beta[0] || alpha[1] < beta[1] || alpha[2] < beta[2]) continue;
        Integer v = 1;
        for (std::size_t c = 0; c < 3; ++c)
          v *= falling(alpha[c], beta[c]) * pw[c][static_cast<std::size_t>(alpha[c] - beta[c])];
        row[j] = v;
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return cols.size();
  IntegerMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  remove_row_content(m);
  return cols.size() - certified_rank(m).rank;
}

std::int64_t symbolic_alpha(const FatPointConfig& config, int s) {
  const std::vector<std::int64_t> mult(config.points.size(), s);
  for (int d = s;; ++d)
    if (fatpoint_dim_exact(config, mult, d) > 0) return d;
}

std::vector<Rational> waldschmidt_estimate(const FatPointConfig& config, int s_max) {
  if (s_max < 1) throw Error(Errc::InvalidInput, "s_max must be positive");
  std::vector<Rational> out;
  for (int s = 1; s <= s_max; ++s)
    out.push_back(Rational(Integer(symbolic_alpha(config, s)), Integer(s)));
  return out;
}

}  // namespace starspline
