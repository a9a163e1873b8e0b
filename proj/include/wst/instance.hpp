#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wst/vertex_set.hpp"

namespace wst {

using Weight = std::uint64_t;

// Per-vertex weight cap; keeps every subset sum exactly representable in 64
// bits (n <= 64 vertices of weight < 2^32 each).
inline constexpr Weight kMaxVertexWeight = 0xFFFF'FFFFull;

enum class Problem { OCT, FVS };

// An undirected vertex-weighted graph with a distinguished terminal set.
// Immutable after construction; all operations on it are pure functions.
class Instance {
 public:
  Instance() = default;  // the empty graph

  // Validates and builds. Throws std::invalid_argument on: n out of
  // [0, kMaxVertices], wrong weight count, weight above kMaxVertexWeight,
  // edge endpoint out of range, self-loop, duplicate edge, terminal out of
  // range.
  static Instance build(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<Weight>& weights,
                        VertexSet terminals);

  // Unit weights, empty terminal set.
  static Instance simple(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const { return m_; }

  bool adjacent(int u, int v) const { return neighbors(u).test(v); }
  VertexSet neighbors(int v) const { return VertexSet{adj_[static_cast<std::size_t>(v)]}; }
  VertexSet closed_neighborhood(int v) const { return neighbors(v) | VertexSet::single(v); }
  VertexSet neighborhood_of(VertexSet s) const;  // N(S), excludes S itself

  Weight weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }
  Weight weight_of(VertexSet s) const;
  Weight total_weight() const { return weight_of(vertices()); }
  const std::vector<Weight>& weights() const { return weights_; }

  VertexSet terminals() const { return terminals_; }
  VertexSet vertices() const { return VertexSet::all(n_); }

  // Edges as (u, v) with u < v, ascending lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  // Copy with every weight multiplied by `factor` (factor bounded so that
  // per-vertex weights stay below kMaxVertexWeight; throws otherwise).
  Instance scaled(Weight factor) const;

  // Copy with a different terminal set.
  Instance with_terminals(VertexSet terminals) const;

  // Copy without the edge uv (which must exist).
  Instance without_edge(int u, int v) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_ && a.weights_ == b.weights_ &&
           a.terminals_ == b.terminals_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<Weight> weights_;
  VertexSet terminals_;
};

// A transversal: the removed vertex set, its total weight, and which problem
// it solves. The complement V \ removed satisfies the matching feasibility
// predicate (is_t_bipartite for OCT, is_t_forest for FVS).
struct Solution {
  VertexSet removed;
  Weight weight = 0;
  Problem problem = Problem::OCT;
};

// A plain weighted vertex set, used by the independent-set / vertex-cover
// style subroutines.
struct SetSolution {
  VertexSet vertices;
  Weight weight = 0;
};

}  // namespace wst
