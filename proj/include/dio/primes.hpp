#pragma once

#include <cstddef>
#include <cstdint>
#include <shared_mutex>
#include <vector>

#include "dio/integer.hpp"

namespace dio {

/// Growing table of primes, filled by a segmented sieve on demand. Extension
/// is serialized by a mutex, so one table can be shared between threads.
class PrimeTable {
public:
  PrimeTable();

  /// The i-th prime, 1-based: prime(1) == 2.
  std::uint64_t prime(std::size_t i);

  /// Every prime <= limit (extends the table as needed).
  std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

  /// Process-wide shared table.
  static PrimeTable& shared();

private:
  void extend_locked(std::uint64_t new_limit);

  std::shared_mutex mutex_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t sieved_to_ = 1; // all primes <= sieved_to_ are present
};

/// Smallest prime dividing z (|z| >= 2); 2 for z == 0.
Int smallest_prime_factor(const Int& z);

/// Prime factorization of z >= 1 as (prime, multiplicity), primes increasing.
std::vector<std::pair<Int, unsigned>> factorize(const Int& z);

} // namespace dio
