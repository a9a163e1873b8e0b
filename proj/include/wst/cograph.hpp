#pragma once

#include <array>
#include <variant>
#include <vector>

#include "wst/instance.hpp"

namespace wst {

struct CotreeNode {
  enum class Kind { Leaf, Union, Join };
  Kind kind = Kind::Leaf;
  int vertex = -1;           // leaves only
  int left = -1, right = -1; // internal nodes have exactly two children
  VertexSet vertices;        // leaves of the subtree
};

// Binary union/join decomposition of a P4-free graph. Children precede their
// parent in `nodes`, so a forward scan is a post-order traversal.
struct Cotree {
  std::vector<CotreeNode> nodes;
  int root = -1;  // -1 for the empty graph
};

using P4Witness = std::array<int, 4>;  // an induced path, in path order

// Recursive component/co-component splitting, with internal nodes binarized
// by left-folding the children. A subset that is both connected and
// co-connected on >= 2 vertices contains an induced P4, which is returned as
// the witness instead of a tree.
std::variant<Cotree, P4Witness> build_cotree(const Instance& g);

// Rebuilds the graph encoded by the tree (union = disjoint union, join =
// complete bipartite between the children's leaves).
Instance reconstruct(const Cotree& tree, const Instance& reference);

// Minimum-weight T-vertex cover of a cograph, by the leaf/union/join DP.
SetSolution wsvc_cograph(const Instance& g, const Cotree& tree);

// Minimum-weight odd T-cycle transversal of a cograph.
Solution wsoct_cograph(const Instance& g, const Cotree& tree);

// Minimum-weight T-feedback vertex set of a cograph.
Solution wsfvs_cograph(const Instance& g, const Cotree& tree);

}  // namespace wst
