#include "dio/exact.hpp"

#include <string>
#include <utility>

#include "dio/error.hpp"
#include "dio/subsets.hpp"

namespace dio {
namespace {

void require_enumerable(const IntMatrix& a, EnumerationLimits limits) {
  if (a.rows() == 0 || a.cols() < a.rows())
    throw Error(ErrorKind::ShapeError,
                "need n >= m >= 1, got " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  auto count = binomial(a.cols(), a.rows());
  if (count > limits.max_subsets)
    throw Error(ErrorKind::TooWide, "C(" + std::to_string(a.cols()) + "," +
                                        std::to_string(a.rows()) +
                                        ") exceeds the enumeration cap");
}

// Bareiss row echelon in place. Returns the rank; `sign` tracks row swaps.
std::size_t bareiss_echelon(IntMatrix& m, int& sign) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Int prev = 1;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) swap(m(p, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

} // namespace

Int determinant(const IntMatrix& m) {
  if (!m.is_square())
    throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix work = m;
  int sign = 1;
  if (bareiss_echelon(work, sign) < n) return 0;
  return sign * work(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix work = a;
  int sign = 1;
  return bareiss_echelon(work, sign);
}

Int gamma(const IntMatrix& a, EnumerationLimits limits) {
  require_enumerable(a, limits);
  Int best = 0;
  for_each_subset(a.cols(), a.rows(), [&](const IndexSet& tau) {
    Int d = abs(determinant(a.select_columns(tau)));
    if (d > best) best = std::move(d);
    return true;
  });
  return best;
}

Int gcd_subdets_bruteforce(const IntMatrix& a, EnumerationLimits limits) {
  require_enumerable(a, limits);
  Int g = 0;
  for_each_subset(a.cols(), a.rows(), [&](const IndexSet& tau) {
    g = gcd(g, determinant(a.select_columns(tau)));
    return g != 1;
  });
  return g;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  if (!u.is_square())
    throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
  const Int det = determinant(u);
  if (abs(det) != 1)
    throw Error(ErrorKind::NotUnimodular, "|det| = " + abs(det).get_str());

  // Gauss-Jordan over Q on [U | I]; the result is integral because det = +-1.
  const std::size_t n = u.rows();
  std::vector<mpq_class> w(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& {
    return w[i * 2 * n + j];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = mpq_class(u(i, j));
    at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (at(p, c) == 0) ++p;
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) swap(at(p, j), at(c, j));
    const mpq_class pivot = at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || at(i, c) == 0) continue;
      const mpq_class f = at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = at(i, n + j).get_num();
  return inv;
}

bool jacobi_check(const IntMatrix& u, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols) {
  if (rows.size() != cols.size())
    throw Error(ErrorKind::SizeMismatch, "|I| != |J|");
  const std::size_t n = u.rows();
  for (auto i : rows)
    if (i >= n) throw Error(ErrorKind::DomainError, "row index out of range");
  for (auto j : cols)
    if (j >= n) throw Error(ErrorKind::DomainError, "column index out of range");
  const IntMatrix inv = inverse_unimodular(u);
  const Int lhs = determinant(inv.submatrix(rows, cols));
  const Int rhs = determinant(u.submatrix(complement(n, cols), complement(n, rows)));
  return abs(lhs) == abs(rhs);
}

bool hadamard_holds(const IntMatrix& b) {
  if (!b.is_square())
    throw Error(ErrorKind::NonSquare, "Hadamard bound needs a square matrix");
  const std::size_t m = b.rows();
  const Int d = determinant(b);
  const Int norm = b.max_abs();
  Int base = Int(static_cast<unsigned long>(m)) * norm * norm;
  Int bound;
  mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), m);
  return d * d <= bound;
}

} // namespace dio
