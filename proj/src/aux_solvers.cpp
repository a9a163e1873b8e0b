#include "wst/aux_solvers.hpp"

#include <stdexcept>
#include <variant>

#include "wst/cograph.hpp"
#include "wst/graph_core.hpp"
#include "wst/recognition.hpp"

namespace wst {
namespace {

void require_free(const Instance& g, const PatternGraph& pattern) {
  if (auto hit = contains_induced(g, pattern))
    throw ClassViolation(pattern.name + "-free", *hit);
}

void keep_max(SetSolution& best, bool& have, VertexSet s, Weight w) {
  if (!have || w > best.weight) {
    best = {s, w};
    have = true;
  }
}

}  // namespace

bool is_t_independent(const Instance& g, VertexSet s) {
  bool ok = true;
  (s & g.terminals()).for_each([&](int v) {
    if (g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

SetSolution wsis_3p1free(const Instance& g) {
  require_free(g, patterns::three_p1());
  const VertexSet t = g.terminals();

  SetSolution best;
  bool have = false;

  // No terminal kept.
  keep_max(best, have, g.vertices() - t, g.weight_of(g.vertices() - t));

  // Exactly one terminal kept: t plus the non-terminal part of V \ N[t],
  // which is a clique in a 3P1-free graph.
  t.for_each([&](int v) {
    VertexSet outside = g.vertices() - g.closed_neighborhood(v);
    bool clique = true;
    outside.for_each([&](int u) {
      if (!g.neighbors(u).contains(outside - VertexSet::single(u))) clique = false;
    });
    if (!clique)
      throw std::logic_error("3P1-free graph with a non-clique non-neighborhood");
    VertexSet s = VertexSet::single(v) | (outside - t);
    keep_max(best, have, s, g.weight_of(s));
  });

  // Two terminals kept: the set is exactly a non-adjacent terminal pair.
  t.for_each([&](int a) {
    (t - VertexSet::all(a + 1)).for_each([&](int b) {
      if (g.adjacent(a, b)) return;
      VertexSet s = VertexSet::of({a, b});
      keep_max(best, have, s, g.weight_of(s));
    });
  });

  if (!is_t_independent(g, best.vertices))
    throw std::logic_error("wsis_3p1free produced a non-T-independent set");
  return best;
}

SetSolution mwis_small(const Instance& g, SmallClass cls) {
  if (cls == SmallClass::ThreeP1Free) {
    require_free(g, patterns::three_p1());
    SetSolution best{{}, 0};
    for (int v = 0; v < g.n(); ++v)
      if (g.weight(v) > best.weight) best = {VertexSet::single(v), g.weight(v)};
    for (int a = 0; a < g.n(); ++a)
      for (int b = a + 1; b < g.n(); ++b) {
        if (g.adjacent(a, b)) continue;
        Weight w = g.weight(a) + g.weight(b);
        if (w > best.weight) best = {VertexSet::of({a, b}), w};
      }
    return best;
  }

  require_free(g, patterns::p3());
  SetSolution best{{}, 0};
  for (VertexSet clique : components(g, g.vertices())) {
    int pick = clique.first();
    clique.for_each([&](int v) {
      if (g.weight(v) > g.weight(pick)) pick = v;
    });
    best.vertices.set(pick);
    best.weight += g.weight(pick);
  }
  return best;
}

SetSolution wsis_p3free(const Instance& g) {
  require_free(g, patterns::p3());
  auto built = build_cotree(g);
  if (!std::holds_alternative<Cotree>(built))
    throw std::logic_error("P3-free graph is not a cograph");
  SetSolution cover = wsvc_cograph(g, std::get<Cotree>(built));
  SetSolution out{g.vertices() - cover.vertices, g.total_weight() - cover.weight};
  if (!is_t_independent(g, out.vertices))
    throw std::logic_error("wsis_p3free produced a non-T-independent set");
  return out;
}

}  // namespace wst
