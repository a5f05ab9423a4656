// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "dio/bounds.hpp"
#include "dio/cli/commands.hpp"
#include "dio/cli/format.hpp"
#include "dio/exact.hpp"
#include "dio/extremal.hpp"
#include "dio/hnf.hpp"
#include "dio/independence.hpp"
#include "dio/subsets.hpp"

using namespace dio;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> body;
};

// Counts checks and keeps the first few failure descriptions.
class Tally {
public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++violations_;
    if (notes_.size() < 3) notes_.push_back(what);
  }
  std::size_t checks() const { return checks_; }
  std::size_t violations() const { return violations_; }

  Outcome outcome(const std::string& summary) const {
    Outcome o{violations_ == 0, summary + ", " + std::to_string(violations_) + " violations"};
    for (const auto& n : notes_) o.detail += "; " + n;
    return o;
  }

private:
  std::size_t checks_ = 0, violations_ = 0;
  std::vector<std::string> notes_;
};

std::string str(const IntMatrix& a) {
  std::ostringstream s;
  s << a;
  return s.str();
}

// 1. Tight family: equality in the prime-product bound and full minimum support.
Outcome tight_family() {
  Tally t;
  const std::vector<std::pair<std::size_t, std::size_t>> cases{
      {1, 2}, {1, 3}, {2, 2}, {3, 2}, {2, 3}};
  std::string summary;
  for (auto [m, k] : cases) {
    const TightInstance inst = gen_tight(m, k);
    const TightChecks c = check_tight(inst, 9);
    const Int ratio = gamma(inst.a) / gcd_subdets(inst.a);
    const auto sol = min_support(inst.a, inst.b);
    const std::string tag = "(" + std::to_string(m) + "," + std::to_string(k) + ")";
    t.expect(c.ok(), tag + " verify_tight false");
    t.expect(c.brute_support.has_value(), tag + " oracle skipped");
    t.expect(sol && sol->size == m * k, tag + " min_support != km");
    t.expect(ratio == rhs_main(m * k, m), tag + " ratio != rhs_main");
    summary += (summary.empty() ? "" : " ") + tag + " " + ratio.get_str() + "==" +
               rhs_main(m * k, m).get_str();
  }
  return t.outcome(summary);
}

// 2. Gamma/gcd >= rhs_main(n, m) on integrally independent full-row-rank A.
Outcome ratio_lower_bound() {
  Tally t;
  SeededRng rng(20240229);
  std::size_t independent = 0, drawn = 0;
  while (independent < 500 && drawn < 2'000'000) {
    const std::size_t m = 1 + rng.below(3);
    const std::size_t n = m + rng.below(5);
    const IntMatrix a = gen_random_matrix({m, n, 5, 0, {}, true}, rng);
    ++drawn;
    if (!is_integrally_independent(a).independent) continue;
    ++independent;
    const Int ratio = gamma(a) / gcd_subdets(a);
    t.expect(ratio >= rhs_main(n, m), str(a));
  }
  t.expect(independent >= 500, "only " + std::to_string(independent) + " independent");
  return t.outcome(std::to_string(independent) + " independent of " +
                   std::to_string(drawn) + " drawn");
}

// 3. Exhaustive biconditional over small matrices, columns as multisets.
Outcome biconditional() {
  Tally t;
  std::size_t tested = 0, independent_count = 0;
  for (std::size_t m = 1; m <= 2; ++m) {
    // All columns with entries in [-2, 2].
    std::vector<IntVector> columns;
    std::size_t count = 1;
    for (std::size_t i = 0; i < m; ++i) count *= 5;
    for (std::size_t code = 0; code < count; ++code) {
      IntVector col(m);
      std::size_t c = code;
      for (std::size_t i = 0; i < m; ++i, c /= 5) col[i] = static_cast<long>(c % 5) - 2;
      columns.push_back(col);
    }
    for (std::size_t n = m; n <= 4; ++n) {
      // Nondecreasing index tuples enumerate column multisets once each.
      std::vector<std::size_t> pick(n, 0);
      for (;;) {
        IntMatrix a(m, n);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < m; ++i) a(i, j) = columns[pick[j]][i];
        if (rank(a) == m) {
          ++tested;
          const bool independent = is_integrally_independent(a).independent;
          independent_count += independent;
          const auto sol = min_support(a, a * IntVector(n, 1));
          t.expect(sol && independent == (sol->size == n), str(a));
        }
        std::size_t j = n;
        while (j > 0 && pick[j - 1] == columns.size() - 1) --j;
        if (j == 0) break;
        ++pick[j - 1];
        for (std::size_t r = j; r < n; ++r) pick[r] = pick[j - 1];
      }
    }
  }
  return t.outcome(std::to_string(tested) + " matrices, " +
                   std::to_string(independent_count) + " independent");
}

// 4. Reduction output: solution, independent support, within both bounds.
Outcome reduction_contract() {
  Tally t;
  SeededRng rng(4242);
  std::size_t omega_checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + rng.below(3);
    const std::size_t n = 1 + rng.below(7);
    const IntMatrix a = gen_random_matrix({m, n, 6, 0, {}, false}, rng);
    const IntVector x = gen_sparse_vector(n, rng.below(n + 1), 5, rng);
    const IntVector b = a * x;
    const auto trace = reduce_support(a, b, x);
    const IndexSet s = support(trace.final_x);
    t.expect(a * trace.final_x == b, "A x' != b for " + str(a));
    if (s.empty()) continue;

    const IntMatrix sub = a.select_columns(s);
    t.expect(is_integrally_independent(sub).independent, "dependent support " + str(sub));

    // Restrict to independent rows so the bound applies at the true rank.
    const HnfResult form = hnf(sub);
    const IntMatrix rows = sub.select_rows(form.pivot_rows);
    const Int ratio = gamma(rows) / gcd_subdets(rows);
    t.expect(s.size() <= invert_support_bound(ratio, form.rank),
             "support above prime-product bound " + str(sub));
    if (form.rank == m) {
      ++omega_checked;
      t.expect(s.size() <= omega_bound(sub), "support above omega bound " + str(sub));
    }
  }
  return t.outcome("500 pairs, " + std::to_string(omega_checked) + " omega checks");
}

// 5. HNF invariants and gcd against brute force.
Outcome hnf_oracles() {
  Tally t;
  SeededRng rng(5151);
  std::size_t gcd_checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + rng.below(4);
    const std::size_t n = 1 + rng.below(7);
    const IntMatrix a = gen_random_matrix({m, n, 9, 0, {}, false}, rng);
    const HnfResult r = hnf(a);
    t.expect(a * r.u == r.h, "AU != H for " + str(a));
    t.expect(abs(determinant(r.u)) == 1, "U not unimodular for " + str(a));
    t.expect(is_hermite_form(r.h), "H not reduced for " + str(a));
    t.expect(hnf(r.h).h == r.h, "HNF not idempotent for " + str(a));
    if (m <= n) {
      ++gcd_checked;
      t.expect(gcd_subdets(a) == gcd_subdets_bruteforce(a), "gcd mismatch " + str(a));
    }
  }
  return t.outcome("500 matrices, " + std::to_string(gcd_checked) + " gcd comparisons");
}

// 6. |det((U^-1)_{IxJ})| == |det(U_{[n]\J x [n]\I})| for every equal-size pair.
Outcome jacobi() {
  Tally t;
  std::size_t pairs = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const IntMatrix u = gen_random_unimodular(n, 4 * n + 8, 3, 600 + seed);
    for (std::size_t k = 0; k <= n; ++k)
      for_each_subset(n, k, [&](const IndexSet& rows) {
        for_each_subset(n, k, [&](const IndexSet& cols) {
          ++pairs;
          t.expect(jacobi_check(u, rows, cols), "mismatch for " + str(u));
          return true;
        });
        return true;
      });
  }
  return t.outcome("100 matrices, " + std::to_string(pairs) + " (I,J) pairs");
}

// 7. max_n stays below the earlier 2m log2(2 sqrt(m) t) bound.
Outcome improvement() {
  Tally t;
  std::string spots;
  for (std::size_t m = 1; m <= 5; ++m) {
    std::size_t prev = 0;
    for (const char* tt : {"10", "100", "1000", "1000000"}) {
      const Int tv(tt);
      const std::size_t n = max_n(m, tv);
      const double baseline = literature_bounds(m, tv).aliev2018;
      t.expect(static_cast<double>(n) <= baseline,
               "m=" + std::to_string(m) + " t=" + tt + ": " + std::to_string(n) +
                   " > " + std::to_string(baseline));
      t.expect(n >= prev, "max_n not monotone in t");
      prev = n;
    }
  }
  t.expect(max_n(1, 10) == 2, "max_n(1,10) != 2");
  t.expect(max_n(2, 3) == 4, "max_n(2,3) != 4");
  std::ostringstream s;
  s << "max_n(5,1e6)=" << max_n(5, Int("1000000")) << " vs " << std::fixed
    << std::setprecision(2) << literature_bounds(5, Int("1000000")).aliev2018;
  return t.outcome(s.str());
}

struct Golden {
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> files;
  int code;
  std::string out;
};

// 8. Round trips and byte-exact CLI goldens.
Outcome round_trips_and_goldens() {
  Tally t;
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t f = m; f <= 5 * m; ++f)
      t.expect(invert_support_bound(rhs_main(f, m), m) == f,
               "round trip f=" + std::to_string(f) + " m=" + std::to_string(m));

  SeededRng rng(8080);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng.below(6), n = 1 + rng.below(6);
    const IntMatrix a =
        gen_random_matrix({m, n, Int("1000000000000000000000000"), rng.next(), {}, false});
    t.expect(cli::parse_matrix(cli::render_matrix(a)) == a, "matrix round trip");
    const IntVector v = a.column(0);
    t.expect(cli::parse_vector(cli::render_vector(v)) == v, "vector round trip");
  }

  const auto dir = std::filesystem::temp_directory_path() /
                   ("dio_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::vector<Golden> goldens{
      {{"hnf", "@a"}, {{"a", "1 2\n3 2\n"}}, 0, "1 2\n1 0\n---\n2 2\n1 -2\n-1 3\n"},
      {{"hnf", "@a"}, {{"a", "2 2\n1 0\n0 1\n"}}, 0, "2 2\n1 0\n0 1\n---\n2 2\n1 0\n0 1\n"},
      {{"min-support", "@a", "@b"}, {{"a", "1 3\n6 10 15\n"}, {"b", "1\n1\n"}}, 0,
       "support: 3\nx: 1 1 -1\n"},
      {{"min-support", "@a", "@b"}, {{"a", "1 1\n2\n"}, {"b", "1\n3\n"}}, 1, "no-solution\n"},
      {{"min-support", "@a", "@b"}, {{"a", "1 3\n6 10 15\n"}, {"b", "1\n0\n"}}, 0,
       "support: 0\nx: 0 0 0\n"},
      {{"reduce", "@a", "@b", "@x"},
       {{"a", "1 2\n1 2\n"}, {"b", "1\n3\n"}, {"x", "2\n1 1\n"}}, 0, "drop 2\nfinal: 3 0\n"},
      {{"reduce", "@a", "@b", "@x"},
       {{"a", "1 2\n3 2\n"}, {"b", "1\n5\n"}, {"x", "2\n1 1\n"}}, 0, "final: 1 1\n"},
      {{"bounds", "@a"}, {{"a", "1 3\n6 10 15\n"}}, 0,
       "gamma: 15\ngcd: 1\nmain_bound: 3\nomega_bound: 3\n"},
      {{"bounds", "--m", "1", "--t", "10"}, {}, 0,
       "max_n: 2\nes2006: 10.6439\naliev2018: 8.6439\n"},
      {{"bounds", "--m", "1", "--t", "1"}, {}, 0,
       "max_n: 1\nes2006: 4.0000\naliev2018: 2.0000\n"},
      {{"independent", "@a"}, {{"a", "1 2\n3 2\n"}}, 0,
       "independent: true\nrow_gcds: 2 3\nrow_primes: 2 3\n"},
      {{"independent", "@a"}, {{"a", "1 2\n1 2\n"}}, 1,
       "independent: false\nrow_gcds: 2 1\nwitness_row: 2\n"},
      {{"verify-tight", "--m", "2", "--k", "2"}, {}, 0,
       "structure: true\ndivisibility: true\ngamma_matches: true\nrhs_equality: true\n"
       "brute_support: true\ntight: true\n"},
  };
  std::size_t case_no = 0;
  for (const auto& g : goldens) {
    std::vector<std::string> args{"dio"};
    for (const auto& arg : g.args) {
      if (arg.front() != '@') {
        args.push_back(arg);
        continue;
      }
      for (const auto& [name, body] : g.files)
        if (name == arg.substr(1)) {
          const auto p = dir / (std::to_string(case_no) + "_" + name);
          std::ofstream(p, std::ios::binary) << body;
          args.push_back(p.string());
        }
    }
    ++case_no;
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      t.expect(code == g.code && out.str() == g.out,
               "golden '" + g.args.front() + "' #" + std::to_string(case_no) +
                   " gave exit " + std::to_string(code) + " output:\n" + out.str());
      if (rep == 0) first = out.str();
      else t.expect(first == out.str(), "output differs between runs");
    }
  }

  const auto gen_dir = (dir / "gen").string();
  std::ostringstream out, err;
  cli::run({"dio", "gen-tight", "--m", "1", "--k", "2", "--out", gen_dir}, out, err);
  std::ifstream a_file(dir / "gen" / "A.mat"), b_file(dir / "gen" / "b.vec");
  std::stringstream a_text, b_text;
  a_text << a_file.rdbuf();
  b_text << b_file.rdbuf();
  t.expect(a_text.str() == "1 2\n3 2\n" && b_text.str() == "1\n5\n", "gen-tight files");
  std::filesystem::remove_all(dir);

  return t.outcome(std::to_string(goldens.size() + 1) + " CLI goldens, " +
                   std::to_string(t.checks()) + " checks");
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "tight-family equality", 60, tight_family},
      {"AC2", "ratio lower bound on independent matrices", 60, ratio_lower_bound},
      {"AC3", "independence iff full minimum support (exhaustive)", 300, biconditional},
      {"AC4", "reduction contract", 0, reduction_contract},
      {"AC5", "HNF and gcd oracles", 0, hnf_oracles},
      {"AC6", "inverse minor identity", 0, jacobi},
      {"AC7", "improvement over 2m log2(2 sqrt(m) t)", 0, improvement},
      {"AC8", "round trips and golden CLI", 0, round_trips_and_goldens},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail += "; exceeded " + std::to_string(c.time_limit_s) + " s";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": "
              << o.detail << " (" << std::fixed << std::setprecision(2) << secs
              << " s)\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
