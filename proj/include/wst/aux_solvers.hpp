#pragma once

#include "wst/errors.hpp"
#include "wst/instance.hpp"

namespace wst {

// Maximum-weight T-independent set of a 3P1-free graph. Independent sets
// there have at most two vertices, which reduces the search to three candidate
// families: all of V \ T; one terminal plus the clique V \ N[t] minus T; and
// non-adjacent terminal pairs. Throws ClassViolation with a 3P1 witness.
SetSolution wsis_3p1free(const Instance& g);

enum class SmallClass { ThreeP1Free, P3Free };

// Maximum-weight independent set. 3P1-free: best singleton or non-adjacent
// pair. P3-free: the graph is a disjoint union of cliques; take the heaviest
// vertex of each. Throws ClassViolation if the declared class is wrong.
SetSolution mwis_small(const Instance& g, SmallClass cls);

// Maximum-weight T-independent set of a P3-free graph, via complementation:
// the complement of a minimum-weight T-vertex cover (P3-free graphs are
// cographs, so the cotree DP applies).
SetSolution wsis_p3free(const Instance& g);

// True iff every terminal inside s is isolated in G[s].
bool is_t_independent(const Instance& g, VertexSet s);

}  // namespace wst
