#pragma once

#include <vector>

#include "wst/instance.hpp"

namespace wst {

struct InducedSubgraph {
  Instance graph;
  std::vector<int> to_original;    // new id -> old id, ascending
  std::vector<int> from_original;  // old id -> new id, -1 if dropped
};

// G[keep]: kept vertices re-indexed densely, edges between kept pairs,
// weights inherited, terminals intersected with keep.
InducedSubgraph induced_subgraph(const Instance& g, VertexSet keep);

// Connected components of the complement graph, ordered by smallest vertex.
// Any two distinct co-components are fully joined in G.
std::vector<VertexSet> co_components(const Instance& g);

// Connected components of G[keep], ordered by smallest vertex.
std::vector<VertexSet> components(const Instance& g, VertexSet keep);

struct Block {
  VertexSet vertices;
  bool bipartite = true;
  bool has_cycle = false;  // equivalently: at least 3 vertices
};

// Biconnected components of G[keep]. Every edge lies in exactly one block;
// a vertex lies on some cycle iff it is in a block with >= 3 vertices, and on
// some odd cycle iff it is in a non-bipartite block.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<std::vector<int>> blocks_of;  // vertex -> indices into blocks

  VertexSet odd_cycle_vertices() const;  // union of non-bipartite blocks
  VertexSet cycle_vertices() const;      // union of blocks with a cycle
};

BlockDecomposition block_decomposition(const Instance& g, VertexSet keep);

// True iff no odd cycle of G[keep] contains a terminal, i.e. every
// non-bipartite block of G[keep] is terminal-free.
bool is_t_bipartite(const Instance& g, VertexSet keep);

// True iff no cycle of G[keep] contains a terminal, i.e. every block of
// G[keep] with a cycle is terminal-free.
bool is_t_forest(const Instance& g, VertexSet keep);

bool feasible(const Instance& g, VertexSet keep, Problem problem);

// Plain structure checks on G[keep], ignoring terminals.
bool is_bipartite(const Instance& g, VertexSet keep);
bool is_forest(const Instance& g, VertexSet keep);

enum class OrMode { Odd, Cycle };

// Split of a feasible kept set: `odd` holds the vertices on odd cycles
// (mode Odd) or on any cycle (mode Cycle), `even` the rest. For Cycle mode
// read odd/even as cycle/forest vertices.
struct SolutionDecomposition {
  VertexSet odd;
  VertexSet even;
  bool mixed = false;  // odd nonempty and even contains a terminal
};

// Requires is_t_bipartite (mode Odd) resp. is_t_forest (mode Cycle) on keep;
// throws std::invalid_argument otherwise.
SolutionDecomposition classify_or(const Instance& g, VertexSet keep, OrMode mode);

// Validates a solution against its instance: recomputed weight matches and
// the complement passes the matching feasibility predicate.
bool solution_ok(const Instance& g, const Solution& sol);

}  // namespace wst
