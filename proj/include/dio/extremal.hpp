#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "dio/integer.hpp"

namespace dio {

/// Block-diagonal instance on which the prime-product bound is attained.
/// Row i holds primorial(k)/p_r at column i*k + r - 1 for r = 1..k, and
/// b = A * 1 needs every one of the k*m columns.
struct TightInstance {
  std::size_t m = 0;
  std::size_t k = 0;
  IntMatrix a;
  IntVector b;
  std::size_t expected_support = 0; // k*m
  Int expected_ratio;               // p_2^m ... p_k^m
};

TightInstance gen_tight(std::size_t m, std::size_t k);

/// Smallest k >= 2 with p_2 * ... * p_k > t.
std::size_t tight_k_for(const Int& t);

struct TightChecks {
  bool structure = false;      // A has the block pattern of gen_tight
  bool divisibility = false;   // p_j does not divide b_i for all i, j <= k
  bool gamma_matches = false;  // gamma(A) == expected_ratio and gcd(A) == 1
  bool rhs_equality = false;   // rhs_main(km, m) == expected_ratio
  std::optional<bool> brute_support; // min_support(A, b) == km, when run

  bool ok() const {
    return structure && divisibility && gamma_matches && rhs_equality &&
           brute_support.value_or(true);
  }
};

/// Runs every check; the brute-force support oracle only when km <= brute_cap.
TightChecks check_tight(const TightInstance& inst, std::size_t brute_cap);
bool verify_tight(const TightInstance& inst, std::size_t brute_cap);

/// Counter-based generator (SplitMix64): state advances by a fixed increment
/// and each output is a mix of the counter, so a seed fixes the stream.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : counter_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

private:
  std::uint64_t counter_;
};

struct RandomSpec {
  std::size_t m = 1;
  std::size_t n = 1;
  Int entry_bound = 1;
  std::uint64_t seed = 0;
  /// Nonzero entries per column, when set (at most m).
  std::optional<std::size_t> sparsity;
  /// Redraw until rank == m.
  bool full_row_rank = false;
};

IntMatrix gen_random_matrix(const RandomSpec& spec);
IntMatrix gen_random_matrix(const RandomSpec& spec, SeededRng& rng);

/// Vector with `nonzeros` entries uniform in [-bound, bound] \ {0}.
IntVector gen_sparse_vector(std::size_t n, std::size_t nonzeros,
                            std::int64_t bound, SeededRng& rng);

/// Identity transformed by `ops` random column swaps, negations and
/// column additions with multipliers in [-multiplier_bound, multiplier_bound].
IntMatrix gen_random_unimodular(std::size_t n, std::size_t ops,
                                const Int& multiplier_bound, std::uint64_t seed);

} // namespace dio
