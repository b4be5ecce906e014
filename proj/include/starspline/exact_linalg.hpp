#ifndef STARSPLINE_EXACT_LINALG_HPP
#define STARSPLINE_EXACT_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace starspline {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using ExactMatrix = DenseMatrix<Rational>;
using IntegerMatrix = DenseMatrix<Integer>;

template <class Scalar>
struct Entry {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

/// Dense matrix from (row, col, value) triplets; repeated positions are summed.
template <class Scalar>
DenseMatrix<Scalar> from_triplets(std::size_t rows, std::size_t cols,
                                  const std::vector<Entry<Scalar>>& entries) {
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(rows),
                                                    static_cast<Eigen::Index>(cols));
  for (const auto& e : entries)
    m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += e.value;
  return m;
}

/// Scale every row by the lcm of its denominators. The result has the same
/// row space as the input.
IntegerMatrix clear_denominators(const ExactMatrix& m);

/// Divide every row by the gcd of its entries.
void remove_row_content(IntegerMatrix& m);

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rank(const ExactMatrix& m);
std::size_t rank(const IntegerMatrix& m);

inline std::size_t kernel_dim(const ExactMatrix& m) {
  return static_cast<std::size_t>(m.cols()) - rank(m);
}
inline std::size_t kernel_dim(const IntegerMatrix& m) {
  return static_cast<std::size_t>(m.cols()) - rank(m);
}

/// Rank of an integer matrix reduced modulo the prime p (p < 2^26).
std::size_t modular_rank(const IntegerMatrix& m, std::uint32_t p);

/// Primes below 2^26 in decreasing order, starting from the largest.
std::uint32_t nth_prime_below_limit(std::size_t n);

enum class RankProof {
  FullRank,     // a modular image already has rank min(rows, cols)
  KnownBound,   // a modular image attains a caller-proven upper bound
  Hadamard,     // agreeing images whose prime product exceeds the minor bound
  Unfinished,   // prime budget exhausted; the value is only a lower bound
};

struct CertifiedRank {
  std::size_t rank = 0;
  RankProof proof = RankProof::FullRank;
  std::size_t primes = 0;
};

struct RankOptions {
  /// Proven upper bound on the rational rank, if the caller has one.
  std::optional<std::size_t> upper_bound;
  /// Stop after this many primes; 0 means unlimited.
  std::size_t max_primes = 0;
};

/// Exact rank of an integer matrix from images modulo word-size primes.
///
/// rank mod p never exceeds the rational rank, so the largest image is a
/// lower bound. It is accepted once it meets the dimension limit, the
/// caller's proven upper bound, or once the product of primes attaining it
/// exceeds the Hadamard bound on the next larger minors. Throws
/// std::logic_error when an image exceeds the caller's upper bound.
CertifiedRank certified_rank(const IntegerMatrix& m, const RankOptions& options = {});

std::string to_string(RankProof proof);

}  // namespace starspline

#endif  // STARSPLINE_EXACT_LINALG_HPP
