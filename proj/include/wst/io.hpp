#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "wst/instance.hpp"
#include "wst/solvers.hpp"

namespace wst {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Instance file format (ASCII, LF endings, 1-indexed vertex ids):
//   p wst <n> <m>
//   w <v> <weight>        n lines, v ascending
//   e <u> <v>             m lines, u < v, ascending lexicographic
//   t <k> <v1> ... <vk>   terminals ascending
// The parser accepts edges and terminals in any order and in either endpoint
// orientation, but rejects self-loops, duplicates, out-of-range ids and
// weights, and count mismatches, with line/column positions.
Instance parse_instance(std::string_view text);

// Canonical serialization of the format above; parse_instance is its inverse.
std::string serialize_instance(const Instance& g);

// The line-oriented key/value report the CLI prints for a solve.
std::string solve_report(const SolveResult& result, Problem problem);

// "class <label>" plus a "witness ..." line for Unsupported instances.
std::string recognize_report(const Instance& g);

}  // namespace wst
