#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cpplc/instance.hpp"
#include "cpplc/tour.hpp"

namespace cpplc {

/// Malformed input. `line` is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Instance files:
//   CPPLC 1
//   <n> <m> <W>
//   <u> <v> <d> <q>      (m lines, edge id = line order)
//
// Solution files:
//   CPPLC-SOL 1
//   cost <value, 6 fractional digits>
//   <m>
//   <edge_id> <dir>      (m lines)
//
// Numbers are written in the shortest form that reads back to the same double.

Instance parse_instance(std::istream& in);
void format_instance(std::ostream& out, const Instance& instance);
Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& instance);

struct SolutionFile {
  double cost = 0.0;
  std::vector<ServiceStep> steps;
};

SolutionFile parse_solution(std::istream& in);
void format_solution(std::ostream& out, const DirectedTour& tour);
SolutionFile read_solution(const std::filesystem::path& path);
void write_solution(const std::filesystem::path& path, const DirectedTour& tour);

/// Shortest round-trip decimal form of `value` ("67.5", "1000", "0.1").
std::string format_number(double value);

}  // namespace cpplc
