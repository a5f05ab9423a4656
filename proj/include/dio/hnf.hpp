#pragma once

#include <optional>
#include <span>

#include "dio/integer.hpp"

namespace dio {

/// Column-style Hermite normal form A*U == H.
///
/// H is lower trapezoidal: the first `rank` columns carry the pivots, the rest
/// are zero. Pivot k sits at row pivot_rows[k] in column k, is strictly
/// positive, and every entry to its left in that row lies in [0, pivot).
/// Rows not listed in pivot_rows have no pivot (rank deficiency or m > n).
/// H is unique for a given A; U is one valid unimodular transform.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  IndexSet pivot_rows;
};

HnfResult hnf(const IntMatrix& a);

/// True when `h` has the trapezoidal reduced shape described on HnfResult.
bool is_hermite_form(const IntMatrix& h);

/// gcd of all m x m subdeterminants, read off the HNF as |det D|.
/// Returns 0 iff rank(A) < m.
Int gcd_subdets(const IntMatrix& a);

/// An integer x with A*x == b, or nullopt when b is not in the lattice L(A).
using SolveResult = std::optional<IntVector>;

SolveResult solve(const IntMatrix& a, std::span<const Int> b);
SolveResult solve(const HnfResult& form, std::span<const Int> b);

bool in_lattice(const IntMatrix& a, std::span<const Int> b);

} // namespace dio
