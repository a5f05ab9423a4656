#include "dio/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dio/bounds.hpp"
#include "dio/error.hpp"
#include "dio/exact.hpp"
#include "dio/hnf.hpp"
#include "dio/independence.hpp"

namespace dio {

TightInstance gen_tight(std::size_t m, std::size_t k) {
  if (m < 1) throw Error(ErrorKind::DomainError, "m must be >= 1");
  if (k < 2) throw Error(ErrorKind::DomainError, "k must be >= 2");
  const Int full = primorial(k);
  TightInstance inst;
  inst.m = m;
  inst.k = k;
  inst.a = IntMatrix(m, k * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 1; r <= k; ++r) inst.a(i, i * k + r - 1) = full / nth_prime(r);
  inst.b = inst.a * IntVector(k * m, 1);
  inst.expected_support = k * m;
  inst.expected_ratio = 1;
  for (std::size_t j = 2; j <= k; ++j) {
    Int pm;
    mpz_pow_ui(pm.get_mpz_t(), nth_prime(j).get_mpz_t(), m);
    inst.expected_ratio *= pm;
  }
  return inst;
}

std::size_t tight_k_for(const Int& t) {
  std::size_t k = 2;
  Int prod = 3;
  while (prod <= t) prod *= nth_prime(++k);
  return k;
}

TightChecks check_tight(const TightInstance& inst, std::size_t brute_cap) {
  TightChecks c;
  const std::size_t m = inst.m, k = inst.k;
  if (m < 1 || k < 2 || inst.a.rows() != m || inst.a.cols() != k * m ||
      inst.b.size() != m)
    return c;

  const Int full = primorial(k);
  c.structure = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k * m; ++j) {
      const bool in_block = j / k == i;
      const Int want = in_block ? Int(full / nth_prime(j % k + 1)) : Int(0);
      if (inst.a(i, j) != want) c.structure = false;
    }

  c.divisibility = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 1; j <= k; ++j)
      if (mpz_divisible_p(inst.b[i].get_mpz_t(), nth_prime(j).get_mpz_t()))
        c.divisibility = false;

  c.gamma_matches =
      gamma(inst.a) == inst.expected_ratio && gcd_subdets(inst.a) == 1;
  c.rhs_equality = rhs_main(k * m, m) == inst.expected_ratio;

  if (k * m <= brute_cap) {
    auto sol = min_support(inst.a, inst.b);
    c.brute_support = sol && sol->size == inst.expected_support;
  }
  return c;
}

bool verify_tight(const TightInstance& inst, std::size_t brute_cap) {
  return check_tight(inst, brute_cap).ok();
}

std::uint64_t SeededRng::next() {
  std::uint64_t z = (counter_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::int64_t SeededRng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

namespace {

Int random_entry(const Int& bound, SeededRng& rng) {
  if (bound.fits_slong_p()) return Int(rng.between(-bound.get_si(), bound.get_si()));
  // Wide bounds: draw 64-bit limbs and reduce; the bias is below 2^-64.
  const Int width = 2 * bound + 1;
  Int r = 0;
  for (std::size_t bits = 0; bits < mpz_sizeinbase(width.get_mpz_t(), 2) + 64;
       bits += 64)
    r = (r << 64) + Int(std::to_string(rng.next()));
  return r % width - bound;
}

Int random_nonzero(const Int& bound, SeededRng& rng) {
  for (;;) {
    Int v = random_entry(bound, rng);
    if (v != 0) return v;
  }
}

} // namespace

IntMatrix gen_random_matrix(const RandomSpec& spec, SeededRng& rng) {
  if (spec.entry_bound < 1)
    throw Error(ErrorKind::DomainError, "entry_bound must be >= 1");
  if (spec.full_row_rank && spec.m > spec.n)
    throw Error(ErrorKind::DomainError, "full row rank needs m <= n");
  if (spec.sparsity && *spec.sparsity > spec.m)
    throw Error(ErrorKind::DomainError, "sparsity exceeds the row count");

  for (;;) {
    IntMatrix a(spec.m, spec.n);
    for (std::size_t j = 0; j < spec.n; ++j) {
      if (!spec.sparsity) {
        for (std::size_t i = 0; i < spec.m; ++i) a(i, j) = random_entry(spec.entry_bound, rng);
        continue;
      }
      // Partial Fisher-Yates picks the rows that get a nonzero entry.
      IndexSet rows(spec.m);
      std::iota(rows.begin(), rows.end(), std::size_t{0});
      for (std::size_t t = 0; t < *spec.sparsity; ++t) {
        std::swap(rows[t], rows[t + rng.below(spec.m - t)]);
        a(rows[t], j) = random_nonzero(spec.entry_bound, rng);
      }
    }
    if (!spec.full_row_rank || rank(a) == spec.m) return a;
  }
}

IntMatrix gen_random_matrix(const RandomSpec& spec) {
  SeededRng rng(spec.seed);
  return gen_random_matrix(spec, rng);
}

IntVector gen_sparse_vector(std::size_t n, std::size_t nonzeros,
                            std::int64_t bound, SeededRng& rng) {
  if (nonzeros > n) throw Error(ErrorKind::DomainError, "more nonzeros than entries");
  if (nonzeros > 0 && bound < 1) throw Error(ErrorKind::DomainError, "bound must be >= 1");
  IntVector x(n, 0);
  IndexSet pos(n);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  for (std::size_t t = 0; t < nonzeros; ++t) {
    std::swap(pos[t], pos[t + rng.below(n - t)]);
    std::int64_t v = 0;
    while (v == 0) v = rng.between(-bound, bound);
    x[pos[t]] = v;
  }
  return x;
}

IntMatrix gen_random_unimodular(std::size_t n, std::size_t ops,
                                const Int& multiplier_bound, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::DomainError, "n must be >= 1");
  SeededRng rng(seed);
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t step = 0; step < ops; ++step) {
    const auto kind = rng.below(3);
    const auto a = static_cast<std::size_t>(rng.below(n));
    auto b = static_cast<std::size_t>(rng.below(n));
    if (kind == 0) {
      u.swap_columns(a, b);
    } else if (kind == 1) {
      u.negate_column(a);
    } else if (n > 1 && multiplier_bound >= 1) {
      while (b == a) b = static_cast<std::size_t>(rng.below(n));
      u.add_column_multiple(a, b, random_entry(multiplier_bound, rng));
    }
  }
  return u;
}

} // namespace dio
