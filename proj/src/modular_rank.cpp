#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "starspline/exact_linalg.hpp"

namespace starspline {

namespace {

constexpr std::uint32_t kPrimeLimit = 1u << 26;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return s0 < 0 ? s0 + p : s0;
}

// Row-major dense matrix of residues stored as doubles. Products of two
// residues stay below 2^52, so every intermediate is an exact integer.
std::size_t eliminate(std::vector<double>& a, std::size_t rows, std::size_t cols,
                      std::uint32_t prime) {
  const double p = prime;
  const double pinv = 1.0 / p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i * cols + c] != 0.0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    double* prow = &a[r * cols];
    if (pivot != r) std::swap_ranges(prow + c, prow + cols, &a[pivot * cols + c]);
    const double inv = static_cast<double>(
        inverse_mod(static_cast<std::int64_t>(prow[c]), static_cast<std::int64_t>(prime)));
    for (std::size_t j = c; j < cols; ++j) {
      double t = prow[j] * inv;
      t -= p * std::floor(t * pinv);
      if (t < 0) t += p;
      if (t >= p) t -= p;
      prow[j] = t;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      double* row = &a[i * cols];
      const double f = row[c];
      if (f == 0.0) continue;
      for (std::size_t j = c + 1; j < cols; ++j) {
        double t = row[j] - f * prow[j];
        t -= p * std::floor(t * pinv);
        t += t < 0 ? p : 0.0;
        t -= t >= p ? p : 0.0;
        row[j] = t;
      }
      row[c] = 0.0;
    }
    ++r;
  }
  return r;
}

struct NonZero {
  std::size_t pos;
  mpz_srcptr value;
};

std::vector<NonZero> nonzeros(const IntegerMatrix& m) {
  std::vector<NonZero> out;
  const std::size_t cols = static_cast<std::size_t>(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        out.push_back({static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(j),
                       m(i, j).backend().data()});
  return out;
}

std::size_t rank_from_nonzeros(const std::vector<NonZero>& nz, std::size_t rows,
                               std::size_t cols, std::uint32_t p) {
  std::vector<double> a(rows * cols, 0.0);
  for (const auto& e : nz) a[e.pos] = static_cast<double>(mpz_fdiv_ui(e.value, p));
  return eliminate(a, rows, cols, p);
}

double log2_abs(mpz_srcptr x) {
  signed long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x);
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

// log2 of the Hadamard bound for k x k minors: the smaller of the products
// of the k largest row norms and of the k largest column norms.
double log2_hadamard(const IntegerMatrix& m, std::size_t k) {
  auto top_sum = [k](std::vector<double> logs) {
    std::sort(logs.begin(), logs.end(), std::greater<>());
    double s = 0;
    for (std::size_t i = 0; i < k && i < logs.size(); ++i) s += logs[i];
    return s;
  };
  mpz_t acc;
  mpz_init(acc);
  std::vector<double> row_logs, col_logs;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    mpz_set_ui(acc, 0);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) mpz_addmul(acc, m(i, j).backend().data(), m(i, j).backend().data());
    if (mpz_sgn(acc) != 0) row_logs.push_back(0.5 * log2_abs(acc));
  }
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    mpz_set_ui(acc, 0);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) mpz_addmul(acc, m(i, j).backend().data(), m(i, j).backend().data());
    if (mpz_sgn(acc) != 0) col_logs.push_back(0.5 * log2_abs(acc));
  }
  mpz_clear(acc);
  return std::min(top_sum(std::move(row_logs)), top_sum(std::move(col_logs)));
}

}  // namespace

std::uint32_t nth_prime_below_limit(std::size_t n) {
  static std::mutex mutex;
  static std::vector<std::uint32_t> primes;
  std::lock_guard<std::mutex> lock(mutex);
  std::uint32_t candidate = primes.empty() ? kPrimeLimit - 1 : primes.back() - 2;
  while (primes.size() <= n) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[n];
}

std::size_t modular_rank(const IntegerMatrix& m, std::uint32_t p) {
  if (p < 2 || p >= kPrimeLimit) throw std::invalid_argument("modular_rank: prime out of range");
  return rank_from_nonzeros(nonzeros(m), static_cast<std::size_t>(m.rows()),
                            static_cast<std::size_t>(m.cols()), p);
}

CertifiedRank certified_rank(const IntegerMatrix& m, const RankOptions& options) {
  const std::size_t rows = static_cast<std::size_t>(m.rows());
  const std::size_t cols = static_cast<std::size_t>(m.cols());
  const std::size_t limit = std::min(rows, cols);
  CertifiedRank out;
  if (limit == 0) return out;

  const auto nz = nonzeros(m);
  if (nz.empty()) return out;

  double bits = 0;  // log2 of the product of primes used so far
  double needed = -1;
  std::size_t needed_for = 0;
  for (std::size_t i = 0;; ++i) {
    if (options.max_primes != 0 && i >= options.max_primes) {
      out.proof = RankProof::Unfinished;
      return out;
    }
    const std::uint32_t p = nth_prime_below_limit(i);
    const std::size_t rp = rank_from_nonzeros(nz, rows, cols, p);
    out.primes = i + 1;
    bits += std::log2(static_cast<double>(p));
    if (options.upper_bound && rp > *options.upper_bound)
      throw std::logic_error("certified_rank: modular rank exceeds the proven upper bound");
    out.rank = std::max(out.rank, rp);
    if (out.rank == limit) {
      out.proof = RankProof::FullRank;
      return out;
    }
    if (options.upper_bound && out.rank == *options.upper_bound) {
      out.proof = RankProof::KnownBound;
      return out;
    }
    if (needed < 0 || needed_for != out.rank) {
      needed = log2_hadamard(m, out.rank + 1) + 1.0;
      needed_for = out.rank;
    }
    if (bits > needed) {
      out.proof = RankProof::Hadamard;
      return out;
    }
  }
}

}  // namespace starspline
