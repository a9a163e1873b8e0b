#include "wst/recognition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wst {

PatternGraph PatternGraph::make(std::string name, int n,
                                std::vector<std::pair<int, int>> edges) {
  PatternGraph p;
  p.name = std::move(name);
  p.n = n;
  p.edges = std::move(edges);
  p.adj.assign(static_cast<std::size_t>(n), VertexSet{});
  for (auto [u, v] : p.edges) {
    p.adj[static_cast<std::size_t>(u)].set(v);
    p.adj[static_cast<std::size_t>(v)].set(u);
  }
  return p;
}

namespace patterns {

PatternGraph p3() { return PatternGraph::make("P3", 3, {{0, 1}, {1, 2}}); }
PatternGraph p4() { return PatternGraph::make("P4", 4, {{0, 1}, {1, 2}, {2, 3}}); }
PatternGraph paw() {
  return PatternGraph::make("paw", 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
}
PatternGraph p1_p2() { return PatternGraph::make("P1+P2", 3, {{1, 2}}); }
PatternGraph p1_p3() { return PatternGraph::make("P1+P3", 4, {{1, 2}, {2, 3}}); }
PatternGraph three_p1() { return PatternGraph::make("3P1", 3, {}); }
PatternGraph five_p1() { return PatternGraph::make("5P1", 5, {}); }
PatternGraph three_p1_p2() {
  return PatternGraph::make("3P1+P2", 5, {{3, 4}});
}
PatternGraph s_p2(int s) {
  if (s < 1 || s > 5) throw std::invalid_argument("s_p2: s must be in 1..5");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return PatternGraph::make(std::to_string(s) + "P2", 2 * s, edges);
}

}  // namespace patterns

std::optional<std::vector<int>> contains_induced(const Instance& g,
                                                 const PatternGraph& pattern) {
  if (pattern.n > 10) throw std::invalid_argument("pattern too large");
  if (pattern.n > g.n()) return std::nullopt;
  if (pattern.n == 0) return std::vector<int>{};

  // Assign high-degree pattern vertices first so adjacency constraints prune
  // early; ties by id keep the search deterministic.
  std::vector<int> order(static_cast<std::size_t>(pattern.n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pattern.adj[static_cast<std::size_t>(a)].count() >
           pattern.adj[static_cast<std::size_t>(b)].count();
  });

  std::vector<int> image(static_cast<std::size_t>(pattern.n), -1);
  VertexSet used;

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == pattern.n) return true;
    int p = order[static_cast<std::size_t>(depth)];
    for (int v = 0; v < g.n(); ++v) {
      if (used.test(v)) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int q = order[static_cast<std::size_t>(d)];
        bool want = pattern.adj[static_cast<std::size_t>(p)].test(q);
        if (g.adjacent(v, image[static_cast<std::size_t>(q)]) != want) ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(p)] = v;
      used.set(v);
      if (self(self, depth + 1)) return true;
      used.reset(v);
      image[static_cast<std::size_t>(p)] = -1;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  return image;
}

std::string ClassLabel::name() const {
  switch (kind) {
    case Kind::P4Free: return "P4free";
    case Kind::P1P3Free: return "P1P3free";
    case Kind::ThreeP1P2Free: return "ThreeP1P2free";
    case Kind::SP2Free: return "sP2free(" + std::to_string(s) + ")";
    case Kind::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

std::optional<ClassLabel> class_from_string(const std::string& name) {
  if (name == "P4free") return ClassLabel{ClassLabel::Kind::P4Free, 0};
  if (name == "P1P3free") return ClassLabel{ClassLabel::Kind::P1P3Free, 0};
  if (name == "ThreeP1P2free") return ClassLabel{ClassLabel::Kind::ThreeP1P2Free, 0};
  for (int s = 1; s <= 4; ++s)
    if (name == "sP2free(" + std::to_string(s) + ")")
      return ClassLabel{ClassLabel::Kind::SP2Free, s};
  if (name == "Unsupported") return ClassLabel{ClassLabel::Kind::Unsupported, 0};
  return std::nullopt;
}

ClassLabel classify(const Instance& g) {
  if (!contains_induced(g, patterns::p4()))
    return {ClassLabel::Kind::P4Free, 0};
  if (!contains_induced(g, patterns::p1_p3()))
    return {ClassLabel::Kind::P1P3Free, 0};
  if (!contains_induced(g, patterns::three_p1_p2()))
    return {ClassLabel::Kind::ThreeP1P2Free, 0};
  for (int s = 1; s <= 4; ++s)
    if (!contains_induced(g, patterns::s_p2(s)))
      return {ClassLabel::Kind::SP2Free, s};
  return {ClassLabel::Kind::Unsupported, 0};
}

PatternGraph forbidden_pattern(const ClassLabel& label) {
  switch (label.kind) {
    case ClassLabel::Kind::P4Free: return patterns::p4();
    case ClassLabel::Kind::P1P3Free: return patterns::p1_p3();
    case ClassLabel::Kind::ThreeP1P2Free: return patterns::three_p1_p2();
    case ClassLabel::Kind::SP2Free: return patterns::s_p2(label.s);
    case ClassLabel::Kind::Unsupported: break;
  }
  throw std::invalid_argument("no forbidden pattern for Unsupported");
}

}  // namespace wst
