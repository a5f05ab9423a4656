#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dio/exact.hpp"
#include "dio/integer.hpp"

namespace dio {

/// Basis of the integer null lattice {x in Z^n : A x = 0}: the trailing
/// n - rank columns of the HNF transform.
struct NullBasis {
  IntMatrix u2; // n x (n - rank)
  std::size_t source_rank = 0;

  std::size_t dimension() const { return u2.rows(); }
  /// gcd of each row of U2; 0 for a row of zeros (including when U2 is empty).
  IntVector row_gcds() const;
};

NullBasis null_basis(const IntMatrix& a);

/// Verdict on whether no column of A is an integer combination of the others.
///
/// Column i can be eliminated exactly when some null vector has entry 1 at i,
/// which happens iff row i of U2 has gcd 1. Rows with gcd 0 belong to columns
/// that take part in no null vector at all.
struct IndependenceCertificate {
  bool independent = false;
  IntVector row_gcds;
  /// First row with gcd 1 (set iff dependent).
  std::optional<std::size_t> witness_row;
  /// Smallest prime dividing each row gcd (set iff independent). A zero row
  /// is divisible by every prime and is mapped to 2.
  std::map<std::size_t, Int> witness_prime;
};

IndependenceCertificate is_integrally_independent(const IntMatrix& a);

/// z = U2 * mu with z[row] == 1 and A z == 0. Throws NoUnitRow when the row gcd
/// is not 1.
IntVector bezout_elimination_vector(const NullBasis& nb, std::size_t row);

struct ReductionStep {
  std::size_t eliminated_index = 0;
  IntVector z;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  IntVector final_x;
};

/// Repeatedly zero a coordinate of x using a null vector that has a 1 there,
/// until the support columns are integrally independent.
ReductionTrace reduce_support(const IntMatrix& a, std::span<const Int> b,
                              std::span<const Int> x);

struct SupportSolution {
  std::size_t size = 0;
  IntVector x;
};

struct MinSupportOptions {
  /// Largest support size to try; nullopt means n.
  std::optional<std::size_t> cap;
  /// Worker threads for the subset scan. The reported size never depends on
  /// this; the witness is the colex-first minimal one regardless.
  unsigned threads = 1;
};

/// Exact minimum support of an integer solution of A x = b, by scanning column
/// subsets in increasing size (colex within a size). nullopt when b is not in
/// L(A); throws CapExceeded when the minimum is larger than the cap.
std::optional<SupportSolution> min_support(const IntMatrix& a,
                                           std::span<const Int> b,
                                           MinSupportOptions options = {});

/// Lower bound on f(A): the largest min_support(A, sum of a_i over S) over all
/// integrally independent column subsets S.
std::size_t estimate_f_lower(const IntMatrix& a, EnumerationLimits limits = {});

} // namespace dio
