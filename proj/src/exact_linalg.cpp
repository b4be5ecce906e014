#include "starspline/exact_linalg.hpp"

#include <gmp.h>

#include <algorithm>
#include <utility>

namespace starspline {

namespace {

mpz_ptr raw(Integer& x) { return x.backend().data(); }

}  // namespace

IntegerMatrix clear_denominators(const ExactMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  Integer scale;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    scale = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Integer den = mp::denominator(m(i, j));
      if (den != 1) scale = mp::lcm(scale, den);
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = mp::numerator(m(i, j)) * (scale / mp::denominator(m(i, j)));
  }
  return out;
}

void remove_row_content(IntegerMatrix& m) {
  Integer g;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    g = 0;
    for (Eigen::Index j = 0; j < m.cols() && g != 1; ++j)
      if (m(i, j) != 0) mpz_gcd(raw(g), raw(g), raw(m(i, j)));
    if (g > 1)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) mpz_divexact(raw(m(i, j)), raw(m(i, j)), raw(g));
  }
}

std::size_t rank(const IntegerMatrix& input) {
  IntegerMatrix a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Integer prev = 1;
  Integer t;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      if (pivot < 0 || mpz_cmpabs(raw(a(i, c)), raw(a(pivot, c))) > 0) pivot = i;
    }
    if (pivot < 0) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        mpz_mul(raw(t), raw(a(r, c)), raw(a(i, j)));
        mpz_submul(raw(t), raw(a(i, c)), raw(a(r, j)));
        mpz_divexact(raw(a(i, j)), raw(t), raw(prev));
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return static_cast<std::size_t>(r);
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rank(clear_denominators(m));
}

std::string to_string(RankProof proof) {
  switch (proof) {
    case RankProof::FullRank: return "full-rank";
    case RankProof::KnownBound: return "known-bound";
    case RankProof::Hadamard: return "hadamard";
    case RankProof::Unfinished: return "unfinished";
  }
  return "unknown";
}

}  // namespace starspline
