#include "dio/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dio/error.hpp"
#include "dio/hnf.hpp"
#include "dio/primes.hpp"
#include "dio/subsets.hpp"

namespace dio {
namespace {

Int pow(const Int& base, std::size_t e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int from_size(std::size_t v) { return Int(static_cast<unsigned long>(v)); }

} // namespace

Int nth_prime(std::size_t i) {
  if (i == 0) throw Error(ErrorKind::DomainError, "primes are indexed from 1");
  return Int(static_cast<unsigned long>(PrimeTable::shared().prime(i)));
}

Int primorial(std::size_t k) {
  Int p = 1;
  for (std::size_t i = 1; i <= k; ++i) p *= nth_prime(i);
  return p;
}

Int rhs_main(std::size_t f, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::DomainError, "m must be >= 1");
  if (f < m)
    throw Error(ErrorKind::DomainError,
                "f = " + std::to_string(f) + " < m = " + std::to_string(m));
  const std::size_t whole = f / m;
  const std::size_t rest = f - m * whole;
  Int r = 1;
  for (std::size_t i = 2; i <= whole; ++i) r *= pow(nth_prime(i), m);
  if (rest > 0) r *= pow(nth_prime(whole + 1), rest);
  return r;
}

std::size_t invert_support_bound(const Int& ratio, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::DomainError, "m must be >= 1");
  if (ratio < 1) throw Error(ErrorKind::DomainError, "ratio must be >= 1");
  // rhs_main(f + 1, m) = rhs_main(f, m) * p_{ceil((f + 1) / m)}
  std::size_t f = m;
  Int rhs = 1;
  for (;;) {
    Int next = rhs * nth_prime((f + m) / m);
    if (next > ratio) return f;
    rhs = std::move(next);
    ++f;
  }
}

std::size_t omega_m(const Int& z, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::DomainError, "m must be >= 1");
  if (z <= 0) throw Error(ErrorKind::DomainError, "omega_m needs z >= 1");
  std::size_t total = 0;
  for (const auto& [p, s] : factorize(z)) total += std::min<std::size_t>(s, m);
  return total;
}

std::size_t omega_bound(const IntMatrix& a, EnumerationLimits limits) {
  const std::size_t m = a.rows();
  if (m == 0 || a.cols() < m)
    throw Error(ErrorKind::ShapeError, "need n >= m >= 1");
  if (binomial(a.cols(), m) > limits.max_subsets)
    throw Error(ErrorKind::TooWide, "column subsets exceed the enumeration cap");
  const Int g = gcd_subdets(a);
  if (g == 0) throw Error(ErrorKind::RankDeficient, "A must have full row rank");

  auto best = std::numeric_limits<std::size_t>::max();
  for_each_subset(a.cols(), m, [&](const IndexSet& tau) {
    Int d = abs(determinant(a.select_columns(tau)));
    if (d == 0) return true;
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
    best = std::min(best, omega_m(d, m));
    return best != 0;
  });
  return m + best;
}

std::size_t max_n(std::size_t m, const Int& t) {
  if (m == 0) throw Error(ErrorKind::DomainError, "m must be >= 1");
  if (t < 1) throw Error(ErrorKind::DomainError, "t must be >= 1");
  const Int limit = pow(from_size(m) * t * t, m);
  std::size_t n = m;
  Int rhs = 1;
  for (;;) {
    Int next = rhs * nth_prime((n + m) / m);
    if (next * next > limit) return n;
    rhs = std::move(next);
    ++n;
  }
}

LiteratureBounds literature_bounds(std::size_t m, const Int& t) {
  if (m == 0) throw Error(ErrorKind::DomainError, "m must be >= 1");
  if (t < 1) throw Error(ErrorKind::DomainError, "t must be >= 1");
  const double md = static_cast<double>(m);
  const double td = t.get_d();
  return {2.0 * md * std::log2(4.0 * md * td),
          2.0 * md * std::log2(2.0 * std::sqrt(md) * td)};
}

BoundReport bound_report(const IntMatrix& a, EnumerationLimits limits) {
  BoundReport r;
  r.m = a.rows();
  r.n = a.cols();
  r.gamma = gamma(a, limits);
  r.gcd = gcd_subdets(a);
  if (r.gcd == 0) throw Error(ErrorKind::RankDeficient, "A must have full row rank");
  mpz_divexact(r.ratio.get_mpz_t(), r.gamma.get_mpz_t(), r.gcd.get_mpz_t());
  r.main_bound = invert_support_bound(r.ratio, r.m);
  r.omega_bound = omega_bound(a, limits);
  r.hadamard_max_n = max_n(r.m, a.max_abs());
  return r;
}

} // namespace dio
