#include "wst/reduction.hpp"

#include <stdexcept>

#include "wst/rng.hpp"

namespace wst {

ReductionOutput vc3_to_wsoct(const Instance& g,
                             const std::array<VertexSet, 3>& parts) {
  VertexSet covered;
  for (const VertexSet& part : parts) {
    if (covered.intersects(part))
      throw std::invalid_argument("parts are not disjoint");
    covered |= part;
    bool independent = true;
    part.for_each([&](int v) {
      if (g.neighbors(v).intersects(part)) independent = false;
    });
    if (!independent)
      throw std::invalid_argument("part is not an independent set");
  }
  if (covered != g.vertices())
    throw std::invalid_argument("parts do not cover the vertex set");

  const int n = g.n();
  ReductionOutput out;
  out.original_to_new.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.original_to_new[static_cast<std::size_t>(v)] = v;
  out.r1 = n;
  out.r2 = n + 1;
  out.r3 = n + 2;
  out.t = n + 3;

  std::vector<std::pair<int, int>> edges = g.edges();
  for (int i = 0; i < 3; ++i) {
    const VertexSet part = parts[static_cast<std::size_t>(i)];
    // Make the part a clique.
    part.for_each([&](int u) {
      (part - VertexSet::all(u + 1)).for_each([&](int v) {
        if (!g.adjacent(u, v)) edges.emplace_back(u, v);
      });
    });
    // Attach the hub.
    part.for_each([&](int u) { edges.emplace_back(u, n + i); });
    edges.emplace_back(n + i, out.t);
  }

  std::vector<Weight> weights(static_cast<std::size_t>(n + 4), 1);
  for (int i = 0; i < 4; ++i)
    weights[static_cast<std::size_t>(n + i)] = static_cast<Weight>(n);

  out.instance =
      Instance::build(n + 4, edges, weights, VertexSet::single(out.t));
  return out;
}

namespace {

Instance random_cograph(int n, Rng& rng, const GeneratorOptions& options) {
  // Random binary cotree: repeatedly merge two random groups under a random
  // union/join label.
  struct Group {
    VertexSet verts;
    std::vector<std::pair<int, int>> edges;
  };
  std::vector<Group> groups;
  for (int v = 0; v < n; ++v) groups.push_back({VertexSet::single(v), {}});
  while (groups.size() > 1) {
    std::size_t i = rng.below(groups.size());
    std::size_t j = rng.below(groups.size() - 1);
    if (j >= i) ++j;
    if (i > j) std::swap(i, j);
    Group merged;
    merged.verts = groups[i].verts | groups[j].verts;
    merged.edges = groups[i].edges;
    merged.edges.insert(merged.edges.end(), groups[j].edges.begin(),
                        groups[j].edges.end());
    if (rng.chance(0.5)) {  // join
      groups[i].verts.for_each([&](int u) {
        groups[j].verts.for_each([&](int v) {
          merged.edges.emplace_back(std::min(u, v), std::max(u, v));
        });
      });
    }
    groups[j] = groups.back();
    groups.pop_back();
    groups[i] = merged;
  }

  std::vector<Weight> weights(static_cast<std::size_t>(n));
  for (Weight& w : weights) w = rng.below(options.weight_max + 1);
  VertexSet terminals;
  for (int v = 0; v < n; ++v)
    if (rng.chance(options.terminal_density)) terminals.set(v);
  return Instance::build(n, n == 0 ? std::vector<std::pair<int, int>>{} : groups[0].edges,
                         weights, terminals);
}

double default_edge_probability(const ClassLabel& label) {
  switch (label.kind) {
    case ClassLabel::Kind::P1P3Free: return 0.85;
    case ClassLabel::Kind::ThreeP1P2Free: return 0.65;
    case ClassLabel::Kind::SP2Free:
      switch (label.s) {
        case 1: return 0.0;
        case 2: return 0.85;
        case 3: return 0.7;
        default: return 0.6;
      }
    default: return 0.3;
  }
}

}  // namespace

Instance random_hfree(int n, const ClassLabel& label, std::uint64_t seed,
                      const GeneratorOptions& options) {
  if (n < 0 || n > 40) throw std::invalid_argument("generator supports n <= 40");
  if (label.kind == ClassLabel::Kind::Unsupported)
    throw std::invalid_argument("cannot generate for label Unsupported");

  Rng rng(seed);
  if (label.kind == ClassLabel::Kind::P4Free) return random_cograph(n, rng, options);

  const PatternGraph pattern = forbidden_pattern(label);
  const double p = options.edge_probability > 0 ? options.edge_probability
                                                : default_edge_probability(label);
  for (int attempt = 0; attempt < options.attempt_budget; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(p)) edges.emplace_back(u, v);
    std::vector<Weight> weights(static_cast<std::size_t>(n));
    for (Weight& w : weights) w = rng.below(options.weight_max + 1);
    VertexSet terminals;
    for (int v = 0; v < n; ++v)
      if (rng.chance(options.terminal_density)) terminals.set(v);
    Instance g = Instance::build(n, edges, weights, terminals);
    if (!contains_induced(g, pattern)) return g;
  }
  throw std::runtime_error("generator attempt budget exhausted for " + label.name());
}

std::pair<Instance, std::array<VertexSet, 3>> random_3partite(
    int n, std::uint64_t seed, double edge_probability) {
  Rng rng(seed);
  std::array<VertexSet, 3> parts;
  std::vector<int> part_of(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int p = rng.range(0, 2);
    part_of[static_cast<std::size_t>(v)] = p;
    parts[static_cast<std::size_t>(p)].set(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)] &&
          rng.chance(edge_probability))
        edges.emplace_back(u, v);
  return {Instance::simple(n, edges), parts};
}

}  // namespace wst
