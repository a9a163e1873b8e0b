#pragma once

#include <cstddef>
#include <functional>

#include "wst/instance.hpp"

namespace wst {

// Receives one maximal set per call; return false to abort the enumeration
// (the returned count is then partial).
using SetVisitor = std::function<bool(VertexSet)>;

// Every maximal independent set of G[keep], exactly once, in ascending mask
// order. Vertex-ordering extension scheme: maximal sets of G[v_0..v_i] are
// grown one vertex at a time, with a maximality test and per-level
// deduplication.
std::size_t enum_maximal_independent_sets(const Instance& g, VertexSet keep,
                                          const SetVisitor& visit);

// Every maximal vertex set inducing a forest, exactly once, in ascending mask
// order (equivalently: complements of the minimal feedback vertex sets).
// Branches on the vertices of a shortest cycle, minimalizes at the leaves,
// and deduplicates.
std::size_t enum_maximal_induced_forests(const Instance& g,
                                         const SetVisitor& visit);

}  // namespace wst
