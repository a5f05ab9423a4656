#include "dio/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "dio/error.hpp"

namespace dio {

PrimeTable::PrimeTable() { extend_locked(1024); }

PrimeTable& PrimeTable::shared() {
  static PrimeTable table;
  return table;
}

void PrimeTable::extend_locked(std::uint64_t new_limit) {
  if (new_limit <= sieved_to_) return;
  const std::uint64_t lo = sieved_to_ + 1;
  const std::uint64_t hi = new_limit;
  std::vector<bool> composite(hi - lo + 1, false);

  // Base primes up to sqrt(hi): anything beyond what we already hold is
  // inside [lo, hi] itself and is found by the sieve below.
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
  for (std::uint64_t p = 2; p <= root; ++p) {
    if (p <= sieved_to_) {
      if (!std::binary_search(primes_.begin(), primes_.end(), p)) continue;
    } else if (composite[p - lo]) {
      continue;
    }
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t q = start; q <= hi; q += p) composite[q - lo] = true;
  }
  for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v <= hi; ++v)
    if (!composite[v - lo]) primes_.push_back(v);
  sieved_to_ = hi;
}

std::uint64_t PrimeTable::prime(std::size_t i) {
  if (i == 0) throw Error(ErrorKind::DomainError, "primes are indexed from 1");
  {
    std::shared_lock lock(mutex_);
    if (i <= primes_.size()) return primes_[i - 1];
  }
  std::unique_lock lock(mutex_);
  while (primes_.size() < i) extend_locked(sieved_to_ * 2);
  return primes_[i - 1];
}

std::vector<std::uint64_t> PrimeTable::primes_up_to(std::uint64_t limit) {
  {
    std::shared_lock lock(mutex_);
    if (limit <= sieved_to_)
      return {primes_.begin(),
              std::upper_bound(primes_.begin(), primes_.end(), limit)};
  }
  std::unique_lock lock(mutex_);
  extend_locked(limit);
  return {primes_.begin(), std::upper_bound(primes_.begin(), primes_.end(), limit)};
}

namespace {

// Trial division in blocks of the prime table; the cofactor left over is 1 or
// a prime once p^2 exceeds it (or the primality test says so early).
template <class OnFactor>
void trial_divide(Int z, OnFactor&& on_factor) {
  auto& table = PrimeTable::shared();
  std::size_t index = 1;
  while (z > 1) {
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) {
      on_factor(z, 1u);
      return;
    }
    const Int p = static_cast<unsigned long>(table.prime(index++));
    if (p * p > z) {
      on_factor(z, 1u);
      return;
    }
    unsigned mult = 0;
    while (mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
      ++mult;
    }
    if (mult > 0 && !on_factor(p, mult)) return;
  }
}

} // namespace

Int smallest_prime_factor(const Int& z) {
  if (z == 0) return 2;
  Int a = abs(z);
  if (a < 2) throw Error(ErrorKind::DomainError, "+-1 has no prime factor");
  // The primality shortcut in trial_divide only fires on the cofactor, and
  // every smaller prime has already been divided out by then.
  Int result;
  trial_divide(a, [&](const Int& p, unsigned) {
    result = p;
    return false;
  });
  return result;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& z) {
  if (z < 1) throw Error(ErrorKind::DomainError, "factorize needs z >= 1");
  std::vector<std::pair<Int, unsigned>> out;
  trial_divide(z, [&](const Int& p, unsigned mult) {
    out.emplace_back(p, mult);
    return true;
  });
  return out;
}

} // namespace dio
