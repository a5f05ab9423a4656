#include "dio/hnf.hpp"

#include "dio/error.hpp"

namespace dio {
namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Apply the same column operation to H and U.
struct Workspace {
  IntMatrix h;
  IntMatrix u;

  void swap_columns(std::size_t a, std::size_t b) {
    h.swap_columns(a, b);
    u.swap_columns(a, b);
  }
  void negate_column(std::size_t j) {
    h.negate_column(j);
    u.negate_column(j);
  }
  // column[dst] -= q * column[src]
  void subtract_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    Int neg = -q;
    h.add_column_multiple(dst, src, neg);
    u.add_column_multiple(dst, src, neg);
  }
};

// Euclid across row i of columns [c, n): leaves at most one nonzero, moved to
// column c. Returns false when the whole tail of the row is zero.
bool eliminate_row(Workspace& w, std::size_t i, std::size_t c) {
  const std::size_t n = w.h.cols();
  for (;;) {
    std::size_t best = n;
    for (std::size_t j = c; j < n; ++j) {
      const Int& v = w.h(i, j);
      if (v != 0 && (best == n || mpz_cmpabs(v.get_mpz_t(), w.h(i, best).get_mpz_t()) < 0)) best = j;
    }
    if (best == n) return false;
    w.swap_columns(c, best);

    bool remaining = false;
    for (std::size_t j = c + 1; j < n; ++j) {
      if (w.h(i, j) == 0) continue;
      w.subtract_multiple(j, c, floor_div(w.h(i, j), w.h(i, c)));
      if (w.h(i, j) != 0) remaining = true;
    }
    if (!remaining) return true;
  }
}

} // namespace

HnfResult hnf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Workspace w{a, IntMatrix::identity(n)};
  HnfResult out;

  std::size_t c = 0;
  for (std::size_t i = 0; i < m && c < n; ++i) {
    if (!eliminate_row(w, i, c)) continue;
    if (w.h(i, c) < 0) w.negate_column(c);
    for (std::size_t j = 0; j < c; ++j)
      w.subtract_multiple(j, c, floor_div(w.h(i, j), w.h(i, c)));
    out.pivot_rows.push_back(i);
    ++c;
  }
  out.rank = c;
  out.h = std::move(w.h);
  out.u = std::move(w.u);
  return out;
}

bool is_hermite_form(const IntMatrix& h) {
  const std::size_t n = h.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = c + 1; j < n; ++j)
      if (h(i, j) != 0) return false;
    if (c == n || h(i, c) == 0) continue;
    const Int& pivot = h(i, c);
    if (pivot < 0) return false;
    for (std::size_t j = 0; j < c; ++j)
      if (h(i, j) < 0 || h(i, j) >= pivot) return false;
    ++c;
  }
  return true;
}

Int gcd_subdets(const IntMatrix& a) {
  if (a.rows() > a.cols())
    throw Error(ErrorKind::ShapeError, "gcd of subdeterminants needs m <= n");
  const HnfResult form = hnf(a);
  if (form.rank < a.rows()) return 0;
  Int det = 1;
  for (std::size_t k = 0; k < form.rank; ++k) det *= form.h(form.pivot_rows[k], k);
  return det;
}

SolveResult solve(const HnfResult& form, std::span<const Int> b) {
  const IntMatrix& h = form.h;
  if (b.size() != h.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "b has " + std::to_string(b.size()) + " entries, A has " +
                    std::to_string(h.rows()) + " rows");
  IntVector y(h.cols(), 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Int residual = b[i];
    for (std::size_t c = 0; c < k; ++c) residual -= h(i, c) * y[c];
    if (k < form.rank && form.pivot_rows[k] == i) {
      if (!mpz_divisible_p(residual.get_mpz_t(), h(i, k).get_mpz_t()))
        return std::nullopt;
      mpz_divexact(y[k].get_mpz_t(), residual.get_mpz_t(), h(i, k).get_mpz_t());
      ++k;
    } else if (residual != 0) {
      return std::nullopt;
    }
  }
  return form.u * std::span<const Int>(y);
}

SolveResult solve(const IntMatrix& a, std::span<const Int> b) {
  if (b.size() != a.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "b has " + std::to_string(b.size()) + " entries, A has " +
                    std::to_string(a.rows()) + " rows");
  return solve(hnf(a), b);
}

bool in_lattice(const IntMatrix& a, std::span<const Int> b) {
  return solve(a, b).has_value();
}

} // namespace dio
