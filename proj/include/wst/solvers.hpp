#pragma once

#include "wst/errors.hpp"
#include "wst/instance.hpp"
#include "wst/oracle.hpp"
#include "wst/recognition.hpp"

namespace wst {

// Minimum-weight plain odd cycle transversal of an sP2-free graph (terminals
// are ignored; this is the every-odd-cycle-forbidden specialization). Double
// enumeration: for each maximal independent set X and each maximal
// independent set Y of G - X, the complement of X u Y is a candidate; every
// minimal transversal arises this way. Throws ClassViolation.
Solution weighted_oct_sp2(const Instance& g, int s);

// Minimum-weight plain feedback vertex set of an sP2-free graph: best
// complement over the maximal induced forests. Throws ClassViolation.
Solution weighted_fvs_sp2(const Instance& g, int s);

// Weighted subset odd cycle transversal on 3P1+P2-free graphs. Optimum over
// the candidate families: plain transversal, remove-all-terminals, the
// 2-clique cut family, the bounded even-core family (|R| <= 8, at most 4
// connectors), and the two-component family (clique R of size <= 2, one
// connector per side or a vertex cut between two connectors). Every candidate
// is validated against is_t_bipartite before scoring.
Solution wsoct_3p1p2(const Instance& g);

// Same skeleton for weighted subset feedback vertex set (no 2-clique family;
// candidates validated against is_t_forest).
Solution wsfvs_3p1p2(const Instance& g);

// Weighted subset odd cycle transversal on P1+P3-free graphs, by co-component
// casework: remove all terminals, solve each co-component recursively, and
// for each pair of co-components combine independent-set style solutions.
Solution wsoct_p1p3(const Instance& g);

// Weighted subset feedback vertex set on P1+P3-free graphs.
Solution wsfvs_p1p3(const Instance& g);

struct SolveResult {
  Solution solution;
  ClassLabel label;
};

// Classify, then dispatch to the matching solver. sP2free labels only admit
// the plain specializations, so they apply when T = V (plain problem) or
// T = {} (optimum 0); anything else falls back to the oracle. Unsupported
// instances run the oracle when n <= oracle_cap and otherwise throw
// UnsupportedInstance with an induced-P4 witness.
SolveResult solve(const Instance& g, Problem problem, int oracle_cap = kOracleCap);

}  // namespace wst
