#include "dio/independence.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "dio/error.hpp"
#include "dio/hnf.hpp"
#include "dio/primes.hpp"
#include "dio/subsets.hpp"

namespace dio {

IntVector NullBasis::row_gcds() const {
  IntVector g(u2.rows());
  for (std::size_t i = 0; i < u2.rows(); ++i) g[i] = gcd_of(u2.row(i));
  return g;
}

NullBasis null_basis(const IntMatrix& a) {
  HnfResult form = hnf(a);
  const std::size_t n = a.cols();
  IndexSet tail;
  for (std::size_t j = form.rank; j < n; ++j) tail.push_back(j);
  return {form.u.select_columns(tail), form.rank};
}

IndependenceCertificate is_integrally_independent(const IntMatrix& a) {
  const NullBasis nb = null_basis(a);
  IndependenceCertificate cert;
  cert.row_gcds = nb.row_gcds();
  for (std::size_t i = 0; i < cert.row_gcds.size(); ++i) {
    if (cert.row_gcds[i] == 1) {
      cert.witness_row = i;
      break;
    }
  }
  cert.independent = !cert.witness_row.has_value();
  if (cert.independent)
    for (std::size_t i = 0; i < cert.row_gcds.size(); ++i)
      cert.witness_prime[i] = smallest_prime_factor(cert.row_gcds[i]);
  return cert;
}

IntVector bezout_elimination_vector(const NullBasis& nb, std::size_t row) {
  if (row >= nb.u2.rows())
    throw Error(ErrorKind::DomainError, "row index out of range");
  const auto entries = nb.u2.row(row);
  if (gcd_of(entries) != 1)
    throw Error(ErrorKind::NoUnitRow,
                "row " + std::to_string(row + 1) + " has gcd " +
                    gcd_of(entries).get_str());
  const IntVector mu = bezout_coefficients(entries);
  return nb.u2 * std::span<const Int>(mu);
}

ReductionTrace reduce_support(const IntMatrix& a, std::span<const Int> b,
                              std::span<const Int> x) {
  if (x.size() != a.cols() || b.size() != a.rows())
    throw Error(ErrorKind::DimensionMismatch, "reduce_support operand shapes");
  if (a * x != IntVector(b.begin(), b.end()))
    throw Error(ErrorKind::NotASolution, "A x != b");

  const std::size_t n = a.cols();
  ReductionTrace trace;
  trace.final_x.assign(x.begin(), x.end());
  for (;;) {
    const IndexSet s = support(trace.final_x);
    if (s.empty()) break;
    const NullBasis nb = null_basis(a.select_columns(s));
    const IntVector g = nb.row_gcds();
    auto unit = std::find(g.begin(), g.end(), Int(1));
    if (unit == g.end()) break;

    const auto local = static_cast<std::size_t>(unit - g.begin());
    const IntVector z_local = bezout_elimination_vector(nb, local);
    ReductionStep step{s[local], embed(n, s, z_local)};

    const Int factor = trace.final_x[step.eliminated_index];
    for (std::size_t j = 0; j < n; ++j) trace.final_x[j] -= factor * step.z[j];
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

namespace {

// Colex-first subset of size k whose columns reach b, or nullopt.
std::optional<SupportSolution> scan_size(const IntMatrix& a,
                                         std::span<const Int> b, std::size_t k,
                                         unsigned threads) {
  const std::size_t n = a.cols();
  auto try_subset = [&](const IndexSet& s) -> std::optional<IntVector> {
    auto y = solve(a.select_columns(s), b);
    if (!y) return std::nullopt;
    return embed(n, s, *y);
  };

  if (threads <= 1) {
    std::optional<SupportSolution> found;
    for_each_subset(n, k, [&](const IndexSet& s) {
      if (auto x = try_subset(s)) {
        found = SupportSolution{k, std::move(*x)};
        return false;
      }
      return true;
    });
    return found;
  }

  // Worker t owns the subsets whose colex rank is t mod threads. The smallest
  // successful rank wins, so the witness matches the single-threaded one.
  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best_rank{none};
  std::mutex result_mutex;
  IntVector best_x;
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      std::uint64_t r = 0;
      for_each_subset(n, k, [&](const IndexSet& s) {
        const std::uint64_t rank_here = r++;
        if (rank_here >= best_rank.load(std::memory_order_relaxed)) return false;
        if (rank_here % threads != t) return true;
        if (auto x = try_subset(s)) {
          std::lock_guard lock(result_mutex);
          if (rank_here < best_rank.load()) {
            best_rank.store(rank_here);
            best_x = std::move(*x);
          }
          return false;
        }
        return true;
      });
    });
  }
  pool.clear();
  if (best_rank.load() == none) return std::nullopt;
  return SupportSolution{k, std::move(best_x)};
}

} // namespace

std::optional<SupportSolution> min_support(const IntMatrix& a,
                                           std::span<const Int> b,
                                           MinSupportOptions options) {
  if (b.size() != a.rows())
    throw Error(ErrorKind::DimensionMismatch, "b length differs from row count");
  const std::size_t n = a.cols();
  if (is_zero(b)) return SupportSolution{0, zero_vector(n)};
  if (!in_lattice(a, b)) return std::nullopt;

  const std::size_t cap = std::min(options.cap.value_or(n), n);
  for (std::size_t k = 1; k <= cap; ++k)
    if (auto found = scan_size(a, b, k, options.threads)) return found;
  throw Error(ErrorKind::CapExceeded,
              "minimum support exceeds cap " + std::to_string(cap));
}

std::size_t estimate_f_lower(const IntMatrix& a, EnumerationLimits limits) {
  const std::size_t n = a.cols();
  if (n >= 63 || (std::uint64_t{1} << n) > limits.max_subsets)
    throw Error(ErrorKind::TooWide, "2^" + std::to_string(n) +
                                        " column subsets exceed the cap");
  if (rank(a) != a.rows())
    throw Error(ErrorKind::RankDeficient, "A must have full row rank");

  std::size_t best = 0;
  for (std::size_t k = n; k >= 1 && k > best; --k) {
    for_each_subset(n, k, [&](const IndexSet& s) {
      if (!is_integrally_independent(a.select_columns(s)).independent) return true;
      const IntVector b = column_sum(a, s);
      if (auto sol = min_support(a, b)) best = std::max(best, sol->size);
      return true;
    });
  }
  return best;
}

} // namespace dio
