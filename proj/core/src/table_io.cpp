#include "semirank/table_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "semirank/errors.hpp"

namespace semirank {

namespace {

[[noreturn]] void fail(std::size_t line, std::string const& what) {
  throw TableError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    auto const start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto const [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  if (!std::getline(in, line)) return false;
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

void write_table(std::ostream& out, FiniteSemigroup const& s) {
  auto const m = s.order();
  out << "semigroup " << m << '\n';
  for (ElementId a = 0; a < m; ++a) {
    auto const r = s.row(a);
    for (std::size_t b = 0; b < m; ++b) {
      if (b != 0) out << ' ';
      out << r[b];
    }
    out << '\n';
  }
  if (s.has_labels()) {
    out << "labels\n";
    for (auto const& l : s.labels()) out << l << '\n';
  }
}

std::string to_table_text(FiniteSemigroup const& s) {
  std::ostringstream out;
  write_table(out, s);
  return out.str();
}

FiniteSemigroup read_table(std::istream& in, Trust trust, std::string name) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) fail(1, "empty input");
  auto const head = split_ws(line);
  if (head.size() != 2 || head[0] != "semigroup") fail(lineno, "expected 'semigroup <m>'");
  auto const m = parse_uint(head[1], lineno);
  if (m == 0) fail(lineno, "order must be positive");
  if (m > 65536) fail(lineno, "order " + std::to_string(m) + " too large for a dense table");

  std::vector<ElementId> table;
  table.reserve(m * m);
  for (std::uint64_t a = 0; a < m; ++a) {
    if (!next_line(in, line, lineno)) fail(lineno + 1, "missing table row " + std::to_string(a));
    auto const toks = split_ws(line);
    if (toks.size() != m) {
      fail(lineno, "expected " + std::to_string(m) + " entries, got " +
                       std::to_string(toks.size()));
    }
    for (std::size_t b = 0; b < m; ++b) {
      auto const v = parse_uint(toks[b], lineno);
      if (v >= m) {
        fail(lineno, "entry at row " + std::to_string(a) + ", column " + std::to_string(b) +
                         " is " + std::to_string(v) + ", outside [0, " + std::to_string(m) + ")");
      }
      table.push_back(static_cast<ElementId>(v));
    }
  }

  std::vector<std::string> labels;
  while (next_line(in, line, lineno)) {
    if (split_ws(line).empty()) continue;
    if (line != "labels") fail(lineno, "expected 'labels' or end of input");
    for (std::uint64_t a = 0; a < m; ++a) {
      if (!next_line(in, line, lineno)) fail(lineno + 1, "missing label " + std::to_string(a));
      if (line.empty()) fail(lineno, "empty label");
      labels.push_back(line);
    }
    while (next_line(in, line, lineno)) {
      if (!split_ws(line).empty()) fail(lineno, "unexpected content after labels");
    }
  }

  return FiniteSemigroup(m, std::move(table), std::move(labels), std::move(name), trust);
}

FiniteSemigroup read_table_file(std::string const& path, Trust trust) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open '" + path + "'");
  return read_table(in, trust, path);
}

}  // namespace semirank
