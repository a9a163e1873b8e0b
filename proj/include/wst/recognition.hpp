#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wst/instance.hpp"

namespace wst {

// One of the fixed forbidden patterns (at most 10 vertices).
struct PatternGraph {
  std::string name;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<VertexSet> adj;

  static PatternGraph make(std::string name, int n,
                           std::vector<std::pair<int, int>> edges);
};

namespace patterns {
PatternGraph p3();
PatternGraph p4();
PatternGraph paw();
PatternGraph p1_p2();
PatternGraph p1_p3();
PatternGraph three_p1();
PatternGraph five_p1();
PatternGraph three_p1_p2();
PatternGraph s_p2(int s);  // s disjoint edges, 1 <= s <= 5
}  // namespace patterns

// Searches for an induced embedding of the pattern: an ordered vertex tuple
// realizing exactly the pattern's edges and non-edges. Exhaustive
// backtracking with adjacency pruning; patterns are small and fixed.
std::optional<std::vector<int>> contains_induced(const Instance& g,
                                                 const PatternGraph& pattern);

struct ClassLabel {
  enum class Kind { P4Free, P1P3Free, ThreeP1P2Free, SP2Free, Unsupported };
  Kind kind = Kind::Unsupported;
  int s = 0;  // only for SP2Free

  std::string name() const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

std::optional<ClassLabel> class_from_string(const std::string& name);

// First matching label in priority order P4free, P1P3free, ThreeP1P2free,
// sP2free with smallest s in 1..4, else Unsupported.
ClassLabel classify(const Instance& g);

// The forbidden pattern a label promises to exclude.
PatternGraph forbidden_pattern(const ClassLabel& label);

}  // namespace wst
