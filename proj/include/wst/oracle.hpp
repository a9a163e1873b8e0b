#pragma once

#include "wst/instance.hpp"
#include "wst/mincut.hpp"

namespace wst {

// Brute-force ground truth. Deliberately a plain subset scan with no pruning
// beyond a running-best weight bound, so that it stays trustworthy.
// The cap is a hard ceiling: a caller-supplied cap can only lower it.
inline constexpr int kOracleCap = 22;

// Minimum-weight transversal over all 2^n removed sets; ties broken by the
// lexicographically smallest removed set. Throws std::invalid_argument when
// n exceeds the cap.
Solution oracle_transversal(const Instance& g, Problem problem,
                            int cap = kOracleCap);

// Minimum-weight vertex cut by scanning all subsets of V \ {t1, t2}.
// feasible = false when t1t2 is an edge.
CutResult oracle_vertex_cut(const Instance& g, int t1, int t2,
                            int cap = kOracleCap);

enum class SubsetProblem { WSIS, WSVC };

// WSIS: maximum-weight set whose terminals are isolated inside it.
// WSVC: minimum-weight set covering every edge incident to a terminal.
// The two optima are complements of each other on the same instance.
SetSolution oracle_subset_is_vc(const Instance& g, SubsetProblem problem,
                                int cap = kOracleCap);

}  // namespace wst
