#include "cpplc/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace cpplc {

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw Error("format_number: conversion failed");
  return std::string(buf, end);
}

namespace {

// Splits the input into whitespace-separated tokens per line, dropping '#'
// comments and blank lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Tokens of the next non-blank line; empty at end of input.
  std::vector<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      std::vector<std::string> tokens;
      for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
      if (!tokens.empty()) return tokens;
    }
    ++line_no_;
    return {};
  }

  int line() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

template <typename T>
T parse_token(const std::string& tok, int line, std::string_view what) {
  T value{};
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, "expected " + std::string(what) + ", got '" + tok + "'");
  }
  return value;
}

void expect_fields(const std::vector<std::string>& tokens, std::size_t count, int line,
                   std::string_view what) {
  if (tokens.empty()) throw ParseError(line, "unexpected end of input, expected " + std::string(what));
  if (tokens.size() != count) {
    throw ParseError(line, "expected " + std::to_string(count) + " fields for " + std::string(what) +
                               ", got " + std::to_string(tokens.size()));
  }
}

void expect_header(LineReader& reader, std::string_view magic) {
  const auto header = reader.next();
  if (header.empty()) throw ParseError(reader.line(), "empty input");
  if (header[0] != magic) {
    throw ParseError(reader.line(), "bad header: expected '" + std::string(magic) + "'");
  }
  if (header.size() != 2) throw ParseError(reader.line(), "bad header: missing version");
  if (header[1] != "1") {
    throw ParseError(reader.line(), "unsupported version " + header[1] + " (expected 1)");
  }
}

void expect_end(LineReader& reader) {
  if (!reader.next().empty()) throw ParseError(reader.line(), "unexpected trailing data");
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader reader(in);
  expect_header(reader, "CPPLC");

  auto sizes = reader.next();
  expect_fields(sizes, 3, reader.line(), "'<n> <m> <W>'");
  const int n = parse_token<int>(sizes[0], reader.line(), "node count");
  const int m = parse_token<int>(sizes[1], reader.line(), "edge count");
  const double w = parse_token<double>(sizes[2], reader.line(), "curb weight");
  if (n < 1) throw ParseError(reader.line(), "node count must be positive");
  if (m < 0) throw ParseError(reader.line(), "edge count must be non-negative");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto fields = reader.next();
    expect_fields(fields, 4, reader.line(), "'<u> <v> <d> <q>'");
    Edge e;
    e.u = parse_token<int>(fields[0], reader.line(), "node id");
    e.v = parse_token<int>(fields[1], reader.line(), "node id");
    e.length = parse_token<double>(fields[2], reader.line(), "length");
    e.demand = parse_token<double>(fields[3], reader.line(), "demand");
    edges.push_back(e);
  }
  expect_end(reader);
  return Instance(n, std::move(edges), w);
}

void format_instance(std::ostream& out, const Instance& instance) {
  out << "CPPLC 1\n"
      << instance.node_count() << ' ' << instance.edge_count() << ' '
      << format_number(instance.curb_weight()) << '\n';
  for (const Edge& e : instance.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_number(e.length) << ' ' << format_number(e.demand)
        << '\n';
  }
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return parse_instance(in);
}

void write_instance(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  format_instance(out, instance);
}

SolutionFile parse_solution(std::istream& in) {
  LineReader reader(in);
  expect_header(reader, "CPPLC-SOL");

  auto cost = reader.next();
  expect_fields(cost, 2, reader.line(), "'cost <value>'");
  if (cost[0] != "cost") throw ParseError(reader.line(), "expected 'cost'");
  SolutionFile sol;
  sol.cost = parse_token<double>(cost[1], reader.line(), "cost");

  auto count = reader.next();
  expect_fields(count, 1, reader.line(), "'<m>'");
  const int m = parse_token<int>(count[0], reader.line(), "edge count");
  if (m < 0) throw ParseError(reader.line(), "edge count must be non-negative");

  for (int i = 0; i < m; ++i) {
    auto fields = reader.next();
    expect_fields(fields, 2, reader.line(), "'<edge_id> <dir>'");
    const int id = parse_token<int>(fields[0], reader.line(), "edge id");
    const int dir = parse_token<int>(fields[1], reader.line(), "direction");
    if (dir != 1 && dir != 2) throw ParseError(reader.line(), "direction must be 1 or 2");
    sol.steps.push_back({id, static_cast<Direction>(dir)});
  }
  expect_end(reader);
  return sol;
}

void format_solution(std::ostream& out, const DirectedTour& tour) {
  char cost[64];
  std::snprintf(cost, sizeof cost, "%.6f", tour.cost);
  out << "CPPLC-SOL 1\n"
      << "cost " << cost << '\n'
      << tour.steps.size() << '\n';
  for (const ServiceStep& s : tour.steps) {
    out << s.edge << ' ' << static_cast<int>(s.dir) << '\n';
  }
}

SolutionFile read_solution(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return parse_solution(in);
}

void write_solution(const std::filesystem::path& path, const DirectedTour& tour) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  format_solution(out, tour);
}

}  // namespace cpplc
