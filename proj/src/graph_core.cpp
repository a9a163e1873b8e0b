#include "wst/graph_core.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace wst {
namespace {

// Tarjan biconnected components of G[keep]; calls fn(block) per block of two
// or more vertices. fn returning false aborts the walk. Returns true iff the
// walk completed. Vertex count is capped at 64, so plain recursion is fine.
template <typename F>
bool for_each_block(const Instance& g, VertexSet keep, F&& fn) {
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  std::array<int, kMaxVertices> parent{};
  std::array<std::pair<int, int>, kMaxVertices * (kMaxVertices - 1) / 2> estack;
  int top = 0;
  int timer = 0;

  auto dfs = [&](auto&& self, int u) -> bool {
    disc[u] = low[u] = ++timer;
    bool ok = true;
    (g.neighbors(u) & keep).for_each([&](int v) {
      if (!ok) return;
      if (disc[v] == 0) {
        parent[v] = u;
        estack[top++] = {u, v};
        if (!self(self, v)) {
          ok = false;
          return;
        }
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          VertexSet block;
          std::pair<int, int> e;
          do {
            e = estack[--top];
            block.set(e.first).set(e.second);
          } while (e != std::pair<int, int>{u, v});
          if (!fn(block)) ok = false;
        }
      } else if (v != parent[u] && disc[v] < disc[u]) {
        estack[top++] = {u, v};
        low[u] = std::min(low[u], disc[v]);
      }
    });
    return ok;
  };

  bool completed = true;
  keep.for_each([&](int r) {
    if (!completed || disc[r] != 0) return;
    parent[r] = -1;
    if (!dfs(dfs, r)) completed = false;
  });
  return completed;
}

bool bipartite_within(const Instance& g, VertexSet block) {
  std::array<int, kMaxVertices> color{};
  VertexSet seen;
  bool ok = true;
  block.for_each([&](int s) {
    if (!ok || seen.test(s)) return;
    color[s] = 0;
    seen.set(s);
    VertexSet frontier = VertexSet::single(s);
    while (frontier.any() && ok) {
      VertexSet next;
      frontier.for_each([&](int u) {
        (g.neighbors(u) & block).for_each([&](int v) {
          if (!seen.test(v)) {
            seen.set(v);
            color[v] = color[u] ^ 1;
            next.set(v);
          } else if (color[v] == color[u]) {
            ok = false;
          }
        });
      });
      frontier = next;
    }
  });
  return ok;
}

}  // namespace

InducedSubgraph induced_subgraph(const Instance& g, VertexSet keep) {
  InducedSubgraph out;
  out.to_original = keep.to_vector();
  out.from_original.assign(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i)
    out.from_original[static_cast<std::size_t>(out.to_original[i])] = static_cast<int>(i);

  int k = static_cast<int>(out.to_original.size());
  std::vector<Weight> w(static_cast<std::size_t>(k));
  VertexSet t;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    int v = out.to_original[static_cast<std::size_t>(i)];
    w[static_cast<std::size_t>(i)] = g.weight(v);
    if (g.terminals().test(v)) t.set(i);
    (g.neighbors(v) & keep).for_each([&](int u) {
      int j = out.from_original[static_cast<std::size_t>(u)];
      if (i < j) edges.emplace_back(i, j);
    });
  }
  out.graph = Instance::build(k, edges, w, t);
  return out;
}

std::vector<VertexSet> components(const Instance& g, VertexSet keep) {
  std::vector<VertexSet> out;
  VertexSet rest = keep;
  while (rest.any()) {
    VertexSet comp = VertexSet::single(rest.first());
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= g.neighbors(v) & keep; });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> co_components(const Instance& g) {
  VertexSet all = g.vertices();
  std::vector<VertexSet> out;
  VertexSet rest = all;
  while (rest.any()) {
    VertexSet comp = VertexSet::single(rest.first());
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next;
      frontier.for_each([&](int v) {
        next |= (all - g.neighbors(v)) - VertexSet::single(v);
      });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

VertexSet BlockDecomposition::odd_cycle_vertices() const {
  VertexSet out;
  for (const Block& b : blocks)
    if (!b.bipartite) out |= b.vertices;
  return out;
}

VertexSet BlockDecomposition::cycle_vertices() const {
  VertexSet out;
  for (const Block& b : blocks)
    if (b.has_cycle) out |= b.vertices;
  return out;
}

BlockDecomposition block_decomposition(const Instance& g, VertexSet keep) {
  BlockDecomposition out;
  out.blocks_of.assign(static_cast<std::size_t>(g.n()), {});
  for_each_block(g, keep, [&](VertexSet b) {
    Block block;
    block.vertices = b;
    block.has_cycle = b.count() >= 3;
    block.bipartite = !block.has_cycle || bipartite_within(g, b);
    int idx = static_cast<int>(out.blocks.size());
    b.for_each([&](int v) { out.blocks_of[static_cast<std::size_t>(v)].push_back(idx); });
    out.blocks.push_back(block);
    return true;
  });
  return out;
}

bool is_t_bipartite(const Instance& g, VertexSet keep) {
  VertexSet t = g.terminals() & keep;
  return for_each_block(g, keep, [&](VertexSet b) {
    if (b.count() < 3 || !b.intersects(t)) return true;
    return bipartite_within(g, b);
  });
}

bool is_t_forest(const Instance& g, VertexSet keep) {
  VertexSet t = g.terminals() & keep;
  return for_each_block(g, keep, [&](VertexSet b) {
    return b.count() < 3 || !b.intersects(t);
  });
}

bool feasible(const Instance& g, VertexSet keep, Problem problem) {
  return problem == Problem::OCT ? is_t_bipartite(g, keep) : is_t_forest(g, keep);
}

bool is_bipartite(const Instance& g, VertexSet keep) {
  return bipartite_within(g, keep);
}

bool is_forest(const Instance& g, VertexSet keep) {
  int twice_edges = 0;
  keep.for_each([&](int v) { twice_edges += (g.neighbors(v) & keep).count(); });
  return twice_edges / 2 ==
         keep.count() - static_cast<int>(components(g, keep).size());
}

SolutionDecomposition classify_or(const Instance& g, VertexSet keep, OrMode mode) {
  if (mode == OrMode::Odd ? !is_t_bipartite(g, keep) : !is_t_forest(g, keep))
    throw std::invalid_argument("classify_or: kept set is infeasible for the mode");

  SolutionDecomposition out;
  for_each_block(g, keep, [&](VertexSet b) {
    bool active = mode == OrMode::Odd ? (b.count() >= 3 && !bipartite_within(g, b))
                                      : b.count() >= 3;
    if (active) out.odd |= b;
    return true;
  });
  out.even = keep - out.odd;
  out.mixed = out.odd.any() && out.even.intersects(g.terminals());
  return out;
}

bool solution_ok(const Instance& g, const Solution& sol) {
  if (!g.vertices().contains(sol.removed)) return false;
  if (g.weight_of(sol.removed) != sol.weight) return false;
  return feasible(g, g.vertices() - sol.removed, sol.problem);
}

}  // namespace wst
