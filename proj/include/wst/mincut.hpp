#pragma once

#include "wst/instance.hpp"

namespace wst {

struct CutQuery {
  const Instance& inst;
  int t1;
  int t2;
};

struct CutResult {
  VertexSet separator;   // disjoint from {t1, t2}
  Weight weight = 0;     // sum of weights over separator
  bool feasible = true;  // false iff t1t2 is an edge (no vertex cut exists)
  Weight max_flow = 0;   // value of the computed flow; equals weight by duality
};

// Minimum-weight vertex set separating t1 from t2, via max-flow on the
// vertex-split network: each non-terminal v becomes v_in -> v_out with
// capacity w(v), terminals are uncapacitated, and each edge uv becomes the
// two uncapacitated arcs u_out -> v_in and v_out -> u_in. The separator is
// read off the source-side reachability cut, which makes the result
// deterministic. Separation and flow/weight agreement are checked per call.
CutResult min_weight_vertex_cut(const CutQuery& q);
CutResult min_weight_vertex_cut(const Instance& g, int t1, int t2);

}  // namespace wst
