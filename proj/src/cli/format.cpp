#include "dio/cli/format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "dio/error.hpp"

namespace dio::cli {
namespace {

struct Line {
  std::size_t number; // 1-based position in the file
  std::string_view text;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> content_lines(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty input");
  if (text.back() != '\n') throw Error(ErrorKind::ParseError, "missing trailing newline");
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') fail(number, "carriage return");
    if (!line.empty() && line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::vector<std::string_view> split_single_spaces(const Line& line) {
  std::vector<std::string_view> tokens;
  if (line.text.empty()) return tokens;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t end = line.text.find(' ', pos);
    std::string_view tok = line.text.substr(pos, end - pos);
    if (tok.empty()) fail(line.number, "tokens must be separated by exactly one space");
    tokens.push_back(tok);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return tokens;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  if (!is_digits(tok) || tok.size() > 9) fail(line, "bad count '" + std::string(tok) + "'");
  return static_cast<std::size_t>(std::stoul(std::string(tok)));
}

Int parse_int(std::string_view tok, std::size_t line) {
  std::string_view digits = tok;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_digits(digits)) fail(line, "bad integer '" + std::string(tok) + "'");
  return Int(std::string(tok), 10);
}

IntVector parse_row(const Line& line, std::size_t expected) {
  const auto tokens = split_single_spaces(line);
  if (tokens.size() != expected)
    fail(line.number, "expected " + std::to_string(expected) + " entries, found " +
                          std::to_string(tokens.size()));
  IntVector row;
  row.reserve(expected);
  for (auto tok : tokens) row.push_back(parse_int(tok, line.number));
  return row;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

IntMatrix parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "missing header");
  const auto header = split_single_spaces(lines[0]);
  if (header.size() != 2) fail(lines[0].number, "header must be \"m n\"");
  const std::size_t m = parse_count(header[0], lines[0].number);
  const std::size_t n = parse_count(header[1], lines[0].number);
  if (lines.size() != m + 1)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(m) +
                                           " rows, found " +
                                           std::to_string(lines.size() - 1));
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const IntVector row = parse_row(lines[i + 1], n);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = row[j];
  }
  return a;
}

IntVector parse_vector(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "missing header");
  const auto header = split_single_spaces(lines[0]);
  if (header.size() != 1) fail(lines[0].number, "header must be \"n\"");
  const std::size_t n = parse_count(header[0], lines[0].number);
  if (lines.size() != 2)
    throw Error(ErrorKind::ParseError, "expected exactly one data line");
  return parse_row(lines[1], n);
}

std::string join(std::span<const Int> v) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) out += ' ';
    out += v[j].get_str();
  }
  return out;
}

std::string render_matrix(const IntMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) out += join(a.row(i)) + "\n";
  return out;
}

std::string render_vector(std::span<const Int> v) {
  return std::to_string(v.size()) + "\n" + join(v) + "\n";
}

IntMatrix read_matrix_file(const std::string& path) {
  try {
    return parse_matrix(read_all(path));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

IntVector read_vector_file(const std::string& path) {
  try {
    return parse_vector(read_all(path));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << contents;
}

} // namespace dio::cli
