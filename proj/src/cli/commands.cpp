#include "dio/cli/commands.hpp"

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dio/bounds.hpp"
#include "dio/cli/format.hpp"
#include "dio/error.hpp"
#include "dio/extremal.hpp"
#include "dio/hnf.hpp"
#include "dio/independence.hpp"

namespace dio::cli {
namespace {

const char* to_text(bool v) { return v ? "true" : "false"; }

Int parse_positive(const std::string& text, const char* what) {
  Int v;
  if (text.empty() || v.set_str(text, 10) != 0 || v < 1)
    throw Error(ErrorKind::ParseError, std::string(what) + " must be a positive integer");
  return v;
}

void require_rows(const IntMatrix& a, std::span<const Int> v, const char* what) {
  if (v.size() != a.rows())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has " + std::to_string(v.size()) +
                    " entries but the matrix has " + std::to_string(a.rows()) + " rows");
}

int cmd_hnf(const std::string& matrix_path, std::ostream& out) {
  const HnfResult form = hnf(read_matrix_file(matrix_path));
  out << render_matrix(form.h) << "---\n" << render_matrix(form.u);
  return kOk;
}

int cmd_solve(const std::string& matrix_path, const std::string& vector_path,
              std::ostream& out) {
  const IntMatrix a = read_matrix_file(matrix_path);
  const IntVector b = read_vector_file(vector_path);
  require_rows(a, b, "b");
  const auto x = solve(a, b);
  if (!x) {
    out << "no-solution\n";
    return kNegative;
  }
  out << "x: " << join(*x) << "\n";
  return kOk;
}

int cmd_min_support(const std::string& matrix_path, const std::string& vector_path,
                    std::optional<std::size_t> cap, unsigned threads,
                    std::ostream& out) {
  const IntMatrix a = read_matrix_file(matrix_path);
  const IntVector b = read_vector_file(vector_path);
  require_rows(a, b, "b");
  const auto found = min_support(a, b, {cap, std::max(threads, 1u)});
  if (!found) {
    out << "no-solution\n";
    return kNegative;
  }
  out << "support: " << found->size << "\n"
      << "x: " << join(found->x) << "\n";
  return kOk;
}

int cmd_reduce(const std::string& matrix_path, const std::string& b_path,
               const std::string& x_path, std::ostream& out) {
  const IntMatrix a = read_matrix_file(matrix_path);
  const IntVector b = read_vector_file(b_path);
  const IntVector x = read_vector_file(x_path);
  require_rows(a, b, "b");
  if (x.size() != a.cols())
    throw Error(ErrorKind::DimensionMismatch, "x length differs from column count");
  const ReductionTrace trace = reduce_support(a, b, x);
  for (const auto& step : trace.steps) out << "drop " << step.eliminated_index + 1 << "\n";
  out << "final: " << join(trace.final_x) << "\n";
  return kOk;
}

int cmd_independent(const std::string& matrix_path, std::ostream& out) {
  const auto cert = is_integrally_independent(read_matrix_file(matrix_path));
  out << "independent: " << to_text(cert.independent) << "\n"
      << "row_gcds: " << join(cert.row_gcds) << "\n";
  if (cert.witness_row) {
    out << "witness_row: " << *cert.witness_row + 1 << "\n";
    return kNegative;
  }
  IntVector primes;
  for (const auto& [row, p] : cert.witness_prime) primes.push_back(p);
  out << "row_primes: " << join(primes) << "\n";
  return kOk;
}

int cmd_bounds_matrix(const std::string& matrix_path, std::ostream& out) {
  const BoundReport r = bound_report(read_matrix_file(matrix_path));
  out << "gamma: " << r.gamma << "\n"
      << "gcd: " << r.gcd << "\n"
      << "main_bound: " << r.main_bound << "\n"
      << "omega_bound: " << r.omega_bound << "\n";
  return kOk;
}

int cmd_bounds_formula(std::size_t m, const Int& t, std::ostream& out) {
  const auto lit = literature_bounds(m, t);
  std::ostringstream s;
  s << std::fixed << std::setprecision(4);
  s << "max_n: " << max_n(m, t) << "\n"
    << "es2006: " << lit.es2006 << "\n"
    << "aliev2018: " << lit.aliev2018 << "\n";
  out << s.str();
  return kOk;
}

int cmd_gen_tight(std::size_t m, std::size_t k, const std::string& dir,
                  std::ostream& out, std::ostream& err) {
  if (k > 12) err << "warning: entries grow like primorial(" << k << ")\n";
  const TightInstance inst = gen_tight(m, k);
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  const std::string meta = "expected_support: " + std::to_string(inst.expected_support) +
                           "\nexpected_ratio: " + inst.expected_ratio.get_str() + "\n";
  write_file((base / "A.mat").string(), render_matrix(inst.a));
  write_file((base / "b.vec").string(), render_vector(inst.b));
  write_file((base / "meta").string(), meta);
  out << meta;
  return kOk;
}

int cmd_verify_tight(std::size_t m, std::size_t k, std::size_t brute_cap,
                     std::ostream& out, std::ostream& err) {
  if (k > 12) err << "warning: entries grow like primorial(" << k << ")\n";
  const TightChecks c = check_tight(gen_tight(m, k), brute_cap);
  out << "structure: " << to_text(c.structure) << "\n"
      << "divisibility: " << to_text(c.divisibility) << "\n"
      << "gamma_matches: " << to_text(c.gamma_matches) << "\n"
      << "rhs_equality: " << to_text(c.rhs_equality) << "\n"
      << "brute_support: " << (c.brute_support ? to_text(*c.brute_support) : "skipped")
      << "\n"
      << "tight: " << to_text(c.ok()) << "\n";
  return c.ok() ? kOk : kNegative;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse integer solutions of linear Diophantine systems", "dio"};
  app.require_subcommand(1);

  std::string matrix_path, b_path, x_path, out_dir;
  std::optional<std::size_t> cap;
  unsigned threads = 1;
  std::size_t m = 0, k = 0, brute_cap = 9;
  std::string t_text;

  auto* hnf_cmd = app.add_subcommand("hnf", "Hermite normal form H and transform U");
  hnf_cmd->add_option("matrix", matrix_path)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Some integer x with A x = b");
  solve_cmd->add_option("matrix", matrix_path)->required();
  solve_cmd->add_option("vector", b_path)->required();

  auto* min_cmd = app.add_subcommand("min-support", "Exact minimum-support solution");
  min_cmd->add_option("matrix", matrix_path)->required();
  min_cmd->add_option("vector", b_path)->required();
  min_cmd->add_option("--cap", cap, "Largest support size to try");
  min_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a solution to independent support");
  reduce_cmd->add_option("matrix", matrix_path)->required();
  reduce_cmd->add_option("b", b_path)->required();
  reduce_cmd->add_option("x", x_path)->required();

  auto* indep_cmd = app.add_subcommand("independent", "Integral independence of the columns");
  indep_cmd->add_option("matrix", matrix_path)->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Support bounds for a matrix or for (m, t)");
  bounds_cmd->add_option("matrix", matrix_path);
  auto* m_opt = bounds_cmd->add_option("--m", m, "Row count")->check(CLI::PositiveNumber);
  auto* t_opt = bounds_cmd->add_option("--t", t_text, "Entry bound");
  m_opt->needs(t_opt);
  t_opt->needs(m_opt);

  auto* gen_cmd = app.add_subcommand("gen-tight", "Write the tight instance for (m, k)");
  gen_cmd->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--k", k)->required();
  gen_cmd->add_option("--out", out_dir)->required();

  auto* verify_cmd = app.add_subcommand("verify-tight", "Check the tight instance for (m, k)");
  verify_cmd->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--k", k)->required();
  verify_cmd->add_option("--brute-cap", brute_cap, "Largest km for the brute-force oracle");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (hnf_cmd->parsed()) return cmd_hnf(matrix_path, out);
    if (solve_cmd->parsed()) return cmd_solve(matrix_path, b_path, out);
    if (min_cmd->parsed()) return cmd_min_support(matrix_path, b_path, cap, threads, out);
    if (reduce_cmd->parsed()) return cmd_reduce(matrix_path, b_path, x_path, out);
    if (indep_cmd->parsed()) return cmd_independent(matrix_path, out);
    if (bounds_cmd->parsed()) {
      const bool formula = m_opt->count() > 0;
      if (formula == !matrix_path.empty()) {
        err << "bounds: give either a matrix file or --m and --t\n";
        return kInputError;
      }
      if (formula) return cmd_bounds_formula(m, parse_positive(t_text, "--t"), out);
      return cmd_bounds_matrix(matrix_path, out);
    }
    if (gen_cmd->parsed()) return cmd_gen_tight(m, k, out_dir, out, err);
    if (verify_cmd->parsed()) return cmd_verify_tight(m, k, brute_cap, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.kind()) {
    case ErrorKind::CapExceeded:
    case ErrorKind::TooWide: return kResourceCap;
    default: return kInputError;
    }
  } catch (const std::filesystem::filesystem_error& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

} // namespace dio::cli
