#pragma once

#include <cstdint>
#include <span>

#include "dio/integer.hpp"

namespace dio {

/// Subset-enumeration budget shared by every brute-force routine.
struct EnumerationLimits {
  std::uint64_t max_subsets = 1'000'000;
};

/// Exact determinant by fraction-free (Bareiss) elimination. The 0x0
/// determinant is 1.
Int determinant(const IntMatrix& m);

/// Largest |det| over all m x m column subsets (Gamma).
Int gamma(const IntMatrix& a, EnumerationLimits limits = {});

/// gcd of all m x m subdeterminants by enumeration; 0 iff every one vanishes.
Int gcd_subdets_bruteforce(const IntMatrix& a, EnumerationLimits limits = {});

/// Integer inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& u);

/// |det((U^-1)_{I x J})| == |det(U_{([n]\J) x ([n]\I)})|. Indices are 0-based.
bool jacobi_check(const IntMatrix& u, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols);

/// |det B| <= (sqrt(m) ||B||_inf)^m, decided as det^2 <= (m ||B||^2)^m.
bool hadamard_holds(const IntMatrix& b);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

} // namespace dio
