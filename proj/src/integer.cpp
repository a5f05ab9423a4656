#include "dio/integer.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

#include "dio/error.hpp"

namespace dio {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NonSquare: return "NonSquare";
  case ErrorKind::TooWide: return "TooWide";
  case ErrorKind::NotUnimodular: return "NotUnimodular";
  case ErrorKind::SizeMismatch: return "SizeMismatch";
  case ErrorKind::ShapeError: return "ShapeError";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::NoUnitRow: return "NoUnitRow";
  case ErrorKind::NotASolution: return "NotASolution";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::DomainError: return "DomainError";
  case ErrorKind::RankDeficient: return "RankDeficient";
  case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int abs(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

Int extended_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

IntVector bezout_coefficients(std::span<const Int> values) {
  // Fold left: g_k = gcd(g_{k-1}, v_k) = s*g_{k-1} + t*v_k, so every earlier
  // coefficient is scaled by s.
  IntVector mu(values.size(), 0);
  Int g = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    Int s, t;
    Int next = extended_gcd(g, values[k], s, t);
    for (std::size_t j = 0; j < k; ++j) mu[j] *= s;
    mu[k] = t;
    g = next;
  }
  return mu;
}

IntVector zero_vector(std::size_t n) { return IntVector(n, 0); }

bool is_zero(std::span<const Int> v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IndexSet support(std::span<const Int> v) {
  IndexSet s;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) s.push_back(j);
  return s;
}

std::size_t support_size(std::span<const Int> v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](const Int& x) { return x != 0; }));
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

IntMatrix IntMatrix::from_row(std::span<const Int> row) {
  IntMatrix a(1, row.size());
  std::copy(row.begin(), row.end(), a.data_.begin());
  return a;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_ids,
                               std::span<const std::size_t> col_ids) const {
  IntMatrix s(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j)
      s(i, j) = (*this)(row_ids[i], col_ids[j]);
  return s;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> col_ids) const {
  IntMatrix s(rows_, col_ids.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j)
      s(i, j) = (*this)(i, col_ids[j]);
  return s;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> row_ids) const {
  IntMatrix s(row_ids.size(), cols_);
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(row_ids[i], j);
  return s;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Int IntMatrix::max_abs() const {
  Int best = 0;
  for (const auto& v : data_)
    if (mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(v);
  return best;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) {
    Int& v = (*this)(i, j);
    mpz_neg(v.get_mpz_t(), v.get_mpz_t());
  }
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src,
                                    const Int& factor) {
  assert(dst != src);
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Int& s = (*this)(i, src);
    if (s != 0) mpz_addmul((*this)(i, dst).get_mpz_t(), factor.get_mpz_t(),
                           s.get_mpz_t());
  }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

IntVector operator*(const IntMatrix& a, std::span<const Int> x) {
  if (a.cols() != x.size())
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product shapes");
  IntVector y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      mpz_addmul(y[i].get_mpz_t(), a(i, j).get_mpz_t(), x[j].get_mpz_t());
  return y;
}

IntVector column_sum(const IntMatrix& a, std::span<const std::size_t> cols) {
  IntVector s(a.rows(), 0);
  for (auto j : cols)
    for (std::size_t i = 0; i < a.rows(); ++i) s[i] += a(i, j);
  return s;
}

IntVector embed(std::size_t n, std::span<const std::size_t> at,
                std::span<const Int> values) {
  IntVector x(n, 0);
  for (std::size_t k = 0; k < at.size(); ++k) x[at[k]] = values[k];
  return x;
}

IndexSet complement(std::size_t n, std::span<const std::size_t> ids) {
  std::vector<bool> taken(n, false);
  for (auto i : ids) taken[i] = true;
  IndexSet rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!taken[i]) rest.push_back(i);
  return rest;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
  }
  return os << ']';
}

} // namespace dio
