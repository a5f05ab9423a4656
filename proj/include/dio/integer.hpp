#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace dio {

/// Arbitrary-precision signed integer. Every scalar in the library is one of
/// these; nothing overflows and nothing is rounded.
using Int = mpz_class;
using IntVector = std::vector<Int>;

/// Column or row indices. 0-based in the C++ API; the text formats and the CLI
/// print them 1-based.
using IndexSet = std::vector<std::size_t>;

Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);

/// Extended Euclid: returns g = gcd(a, b) >= 0 and sets s, t with a*s + b*t = g.
Int extended_gcd(const Int& a, const Int& b, Int& s, Int& t);

/// gcd of all entries, with gcd of the empty sequence equal to 0.
Int gcd_of(std::span<const Int> values);

/// Coefficients mu with sum(mu[j] * values[j]) == gcd_of(values).
IntVector bezout_coefficients(std::span<const Int> values);

IntVector zero_vector(std::size_t n);
bool is_zero(std::span<const Int> v);
IndexSet support(std::span<const Int> v);
std::size_t support_size(std::span<const Int> v);

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_row(std::span<const Int> row);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Int> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  IntVector column(std::size_t j) const;

  /// A_{I x J}, entries kept in the order of I and J.
  IntMatrix submatrix(std::span<const std::size_t> row_ids,
                      std::span<const std::size_t> col_ids) const;
  IntMatrix select_columns(std::span<const std::size_t> col_ids) const;
  IntMatrix select_rows(std::span<const std::size_t> row_ids) const;
  IntMatrix transpose() const;

  /// ||A||_inf, the largest entry magnitude (0 for an empty matrix).
  Int max_abs() const;

  void swap_columns(std::size_t a, std::size_t b);
  void negate_column(std::size_t j);
  /// column[dst] += factor * column[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Int& factor);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const Int> x);

/// Sum of the columns indexed by `cols`.
IntVector column_sum(const IntMatrix& a, std::span<const std::size_t> cols);

/// Scatter `values` into a length-n zero vector at positions `at`.
IntVector embed(std::size_t n, std::span<const std::size_t> at,
                std::span<const Int> values);

IndexSet complement(std::size_t n, std::span<const std::size_t> ids);

std::ostream& operator<<(std::ostream& os, const IntMatrix& a);

} // namespace dio
