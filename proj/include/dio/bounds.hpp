#pragma once

#include <cstddef>

#include "dio/exact.hpp"
#include "dio/integer.hpp"

namespace dio {

/// i-th prime, 1-based (nth_prime(1) == 2).
Int nth_prime(std::size_t i);

/// Product of the first k primes; primorial(0) == 1.
Int primorial(std::size_t k);

/// Prime-product lower bound on Gamma(A)/gcd(A) for support size f and m rows:
///
///   p_2^m p_3^m ... p_{floor(f/m)}^m * p_{ceil(f/m)}^(f - m*floor(f/m))
///
/// Equal to 1 when f == m. Throws DomainError for f < m or m == 0.
Int rhs_main(std::size_t f, std::size_t m);

/// Largest f >= m with rhs_main(f, m) <= ratio.
std::size_t invert_support_bound(const Int& ratio, std::size_t m);

/// Truncated prime omega: sum over prime powers q^s || z of min(s, m).
std::size_t omega_m(const Int& z, std::size_t m);

/// m + min over nonsingular m x m column subsets tau of
/// omega_m(|det A_tau| / gcd(A)). Needs full row rank.
std::size_t omega_bound(const IntMatrix& a, EnumerationLimits limits = {});

/// Largest n >= m with rhs_main(n, m)^2 <= (m t^2)^m, i.e. the support size the
/// Hadamard bound still admits for entries bounded by t.
std::size_t max_n(std::size_t m, const Int& t);

/// Earlier closed-form support bounds, base-2 logarithms. Display only.
struct LiteratureBounds {
  double es2006 = 0;    // 2m log2(4mt)
  double aliev2018 = 0; // 2m log2(2 sqrt(m) t)
};

LiteratureBounds literature_bounds(std::size_t m, const Int& t);

struct BoundReport {
  std::size_t m = 0;
  std::size_t n = 0;
  Int gamma;
  Int gcd;
  /// gamma / gcd; gcd always divides gamma since gamma is itself a minor.
  Int ratio;
  std::size_t main_bound = 0;
  std::size_t omega_bound = 0;
  std::size_t hadamard_max_n = 0;
};

BoundReport bound_report(const IntMatrix& a, EnumerationLimits limits = {});

} // namespace dio
