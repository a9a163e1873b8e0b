#include "wst/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wst/graph_core.hpp"

namespace wst {
namespace {

void check_cap(const Instance& g, int cap) {
  cap = std::min(cap, kOracleCap);  // 22 is a hard ceiling, the flag only lowers
  if (g.n() > cap)
    throw std::invalid_argument("oracle rejects n = " + std::to_string(g.n()) +
                                " (cap " + std::to_string(cap) + ")");
}

}  // namespace

Solution oracle_transversal(const Instance& g, Problem problem, int cap) {
  check_cap(g, cap);
  const VertexSet all = g.vertices();
  Solution best{all, g.total_weight(), problem};  // removing everything is always feasible
  const std::uint64_t end = g.n() == 0 ? 1 : (std::uint64_t{1} << g.n());
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    VertexSet removed{mask};
    Weight w = g.weight_of(removed);
    if (w > best.weight) continue;
    if (w == best.weight && !removed.lex_less(best.removed)) continue;
    if (feasible(g, all - removed, problem)) best = {removed, w, problem};
  }
  return best;
}

CutResult oracle_vertex_cut(const Instance& g, int t1, int t2, int cap) {
  check_cap(g, cap);
  if (t1 == t2 || t1 < 0 || t1 >= g.n() || t2 < 0 || t2 >= g.n())
    throw std::invalid_argument("cut terminals must be distinct vertices");

  CutResult out;
  if (g.adjacent(t1, t2)) {
    out.feasible = false;
    return out;
  }
  auto separates = [&](VertexSet removed) {
    for (VertexSet comp : components(g, g.vertices() - removed))
      if (comp.test(t1) && comp.test(t2)) return false;
    return true;
  };

  const VertexSet candidates = g.vertices() - VertexSet::of({t1, t2});
  bool have = false;
  const std::uint64_t end = g.n() == 0 ? 1 : (std::uint64_t{1} << g.n());
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    VertexSet s{mask};
    if (!candidates.contains(s)) continue;
    Weight w = g.weight_of(s);
    if (have && (w > out.weight || (w == out.weight && !s.lex_less(out.separator))))
      continue;
    if (separates(s)) {
      out.separator = s;
      out.weight = w;
      have = true;
    }
  }
  out.max_flow = out.weight;
  return out;
}

SetSolution oracle_subset_is_vc(const Instance& g, SubsetProblem problem, int cap) {
  check_cap(g, cap);
  const VertexSet t = g.terminals();
  auto is_t_independent = [&](VertexSet s) {
    bool ok = true;
    (s & t).for_each([&](int v) {
      if (g.neighbors(v).intersects(s)) ok = false;
    });
    return ok;
  };
  auto is_t_cover = [&](VertexSet s) {
    bool ok = true;
    (t - s).for_each([&](int v) {
      if (!s.contains(g.neighbors(v))) ok = false;
    });
    return ok;
  };

  SetSolution best;
  bool have = false;
  const std::uint64_t end = g.n() == 0 ? 1 : (std::uint64_t{1} << g.n());
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    VertexSet s{mask};
    Weight w = g.weight_of(s);
    if (problem == SubsetProblem::WSIS) {
      if (have && (w < best.weight || (w == best.weight && !s.lex_less(best.vertices))))
        continue;
      if (!is_t_independent(s)) continue;
    } else {
      if (have && (w > best.weight || (w == best.weight && !s.lex_less(best.vertices))))
        continue;
      if (!is_t_cover(s)) continue;
    }
    best = {s, w};
    have = true;
  }
  return best;
}

}  // namespace wst
