#include "wst/solvers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <variant>
#include <vector>

#include "wst/aux_solvers.hpp"
#include "wst/cograph.hpp"
#include "wst/enumeration.hpp"
#include "wst/graph_core.hpp"
#include "wst/mincut.hpp"

namespace wst {
namespace {

void require_free(const Instance& g, const PatternGraph& pattern) {
  if (auto hit = contains_induced(g, pattern))
    throw ClassViolation(pattern.name + "-free", *hit);
}

// Strict-improvement tracker: among equal weights the first candidate wins,
// so the family order fixes the tie-break and output is deterministic.
struct BestTracker {
  Weight w = std::numeric_limits<Weight>::max();
  VertexSet removed;

  void offer(VertexSet r, Weight weight) {
    if (weight < w) {
      w = weight;
      removed = r;
    }
  }
};

template <typename F>
void for_each_combination(const std::vector<int>& ids, int k, F&& fn) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      VertexSet s;
      for (int v : pick) s.set(v);
      fn(s);
      return;
    }
    for (int i = start; i <= static_cast<int>(ids.size()) - (k - depth); ++i) {
      pick[static_cast<std::size_t>(depth)] = ids[static_cast<std::size_t>(i)];
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

bool max_independent_set_at_most(const Instance& g, VertexSet s, int bound) {
  // |s| <= 8 here; scan subsets of s of size bound + 1.
  bool ok = true;
  for_each_combination(s.to_vector(), bound + 1, [&](VertexSet sub) {
    if (!ok) return;
    bool independent = true;
    sub.for_each([&](int v) {
      if (g.neighbors(v).intersects(sub)) independent = false;
    });
    if (independent) ok = false;
  });
  return ok;
}

}  // namespace

Solution weighted_oct_sp2(const Instance& g, int s) {
  if (s < 1 || s > 4) throw std::invalid_argument("s must be in 1..4");
  require_free(g, patterns::s_p2(s));
  const VertexSet all = g.vertices();
  BestTracker best;
  enum_maximal_independent_sets(g, all, [&](VertexSet x) {
    enum_maximal_independent_sets(g, all - x, [&](VertexSet y) {
      VertexSet removed = all - x - y;
      best.offer(removed, g.weight_of(removed));
      return true;
    });
    return true;
  });
  Solution sol{best.removed, best.w, Problem::OCT};
  if (!is_bipartite(g, all - sol.removed))
    throw std::logic_error("weighted_oct_sp2 kept a non-bipartite graph");
  return sol;
}

Solution weighted_fvs_sp2(const Instance& g, int s) {
  if (s < 1 || s > 4) throw std::invalid_argument("s must be in 1..4");
  require_free(g, patterns::s_p2(s));
  const VertexSet all = g.vertices();
  BestTracker best;
  enum_maximal_induced_forests(g, [&](VertexSet forest) {
    best.offer(all - forest, g.weight_of(all - forest));
    return true;
  });
  Solution sol{best.removed, best.w, Problem::FVS};
  if (!is_forest(g, all - sol.removed))
    throw std::logic_error("weighted_fvs_sp2 kept a non-forest");
  return sol;
}

namespace {

// Shared candidate machinery for the 3P1+P2-free solvers. `offer` takes a
// kept set, validates it, and scores its complement.

// 2-clique family (OCT only): for every induced 4-cycle u1,u2,v2,v1 with
// non-terminal v1,v2, delete T and N({u1,u2}) \ {v1,v2}, drop the edge v1v2
// (it is the bridge between the two cliques being searched for), and run a
// minimum vertex cut between v1 and v2. Kept candidate: {u1,u2} plus the
// cut's remainder. Clearing the kept pair's neighborhood (rather than all of
// N(T)) is what keeps the candidate feasible without deleting clique vertices
// that happen to neighbor removed terminals.
template <typename Offer>
void two_clique_candidates(const Instance& g, const Offer& offer) {
  const VertexSet all = g.vertices(), t = g.terminals();
  for (int u1 = 0; u1 < g.n(); ++u1) {
    g.neighbors(u1).for_each([&](int u2) {
      if (u1 == u2) return;
      (g.neighbors(u1) - VertexSet::of({u2})).for_each([&](int v1) {
        if (t.test(v1) || g.adjacent(u2, v1)) return;
        (g.neighbors(u2) & g.neighbors(v1)).for_each([&](int v2) {
          if (v2 == u1 || v2 == v1 || t.test(v2) || g.adjacent(u1, v2)) return;
          VertexSet pair_nbhd =
              (g.neighbors(u1) | g.neighbors(u2)) | VertexSet::of({u1, u2});
          VertexSet keep = (all - t) - (pair_nbhd - VertexSet::of({v1, v2}));
          InducedSubgraph sub = induced_subgraph(g, keep);
          int m1 = sub.from_original[static_cast<std::size_t>(v1)];
          int m2 = sub.from_original[static_cast<std::size_t>(v2)];
          CutResult cut =
              min_weight_vertex_cut(sub.graph.without_edge(m1, m2), m1, m2);
          VertexSet kept = VertexSet::of({u1, u2});
          (sub.graph.vertices() - cut.separator).for_each([&](int v) {
            kept.set(sub.to_original[static_cast<std::size_t>(v)]);
          });
          offer(kept);
        });
      });
    });
  }
}

// Bounded even-core family: every kept set R of at most 8 vertices that
// induces a bipartite graph (OCT) or forest (FVS) with no independent set of
// five vertices, extended by a set D of at most four connectors touching
// pairwise-distinct components of G[R], plus every non-terminal with no
// neighbor in R.
template <typename Offer>
void bounded_core_candidates(const Instance& g, Problem problem,
                             const Offer& offer) {
  const VertexSet all = g.vertices(), t = g.terminals();
  const std::vector<int> vertex_ids = all.to_vector();

  for (int k = 0; k <= std::min(8, g.n()); ++k) {
    for_each_combination(vertex_ids, k, [&](VertexSet r) {
      if (problem == Problem::OCT ? !is_bipartite(g, r) : !is_forest(g, r))
        return;
      if (!max_independent_set_at_most(g, r, 4)) return;

      const std::vector<VertexSet> comps = components(g, r);
      const VertexSet nr = g.neighborhood_of(r);
      const VertexSet loose = all - t - r - nr;  // joins O unconditionally

      std::vector<int> pool;
      std::vector<std::uint32_t> touch;
      (nr - t).for_each([&](int v) {
        std::uint32_t mask = 0;
        for (std::size_t c = 0; c < comps.size(); ++c)
          if (g.neighbors(v).intersects(comps[c])) mask |= 1u << c;
        pool.push_back(v);
        touch.push_back(mask);
      });

      auto emit = [&](VertexSet d) {
        if (!feasible(g, r | d, problem)) return;
        offer(r | d | loose);
      };
      auto rec = [&](auto&& self, std::size_t start, VertexSet d,
                     std::uint32_t touched, int count) -> void {
        emit(d);
        if (count == 4) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
          if (touch[i] & touched) continue;
          self(self, i + 1, d | VertexSet::single(pool[i]), touched | touch[i],
               count + 1);
        }
      };
      rec(rec, 0, VertexSet{}, 0, 0);
    });
  }
}

// Two-component family: R is a clique of size 1 or 2; each component of the
// kept core gets at most one connector. With two connectors the rest of the
// core comes from a minimum vertex cut between them in the graph with T, R
// and all other neighbors of R deleted.
template <typename Offer>
void two_component_candidates(const Instance& g, Problem problem,
                              const Offer& offer) {
  const VertexSet all = g.vertices(), t = g.terminals();

  std::vector<VertexSet> cliques;
  for (int v = 0; v < g.n(); ++v) cliques.push_back(VertexSet::single(v));
  for (auto [u, v] : g.edges()) cliques.push_back(VertexSet::of({u, v}));

  for (VertexSet r : cliques) {
    const VertexSet nr = g.neighborhood_of(r);
    const VertexSet pool = nr - t;
    const VertexSet loose = all - t - r - nr;

    if (feasible(g, r, problem)) offer(r | loose);
    pool.for_each([&](int v) {
      if (feasible(g, r | VertexSet::single(v), problem))
        offer(r | VertexSet::single(v) | loose);
    });

    std::vector<int> pv = pool.to_vector();
    for (std::size_t i = 0; i < pv.size(); ++i) {
      for (std::size_t j = i + 1; j < pv.size(); ++j) {
        int v = pv[i], w = pv[j];
        if (g.adjacent(v, w)) continue;  // no vertex cut exists
        if (!feasible(g, r | VertexSet::of({v, w}), problem)) continue;
        VertexSet keep = all - t - r - (nr - VertexSet::of({v, w}));
        InducedSubgraph sub = induced_subgraph(g, keep);
        CutResult cut = min_weight_vertex_cut(
            sub.graph, sub.from_original[static_cast<std::size_t>(v)],
            sub.from_original[static_cast<std::size_t>(w)]);
        VertexSet kept = r;
        (sub.graph.vertices() - cut.separator).for_each([&](int x) {
          kept.set(sub.to_original[static_cast<std::size_t>(x)]);
        });
        offer(kept);
      }
    }
  }
}

Solution subset_transversal_3p1p2(const Instance& g, Problem problem) {
  require_free(g, patterns::three_p1_p2());
  const VertexSet all = g.vertices();
  BestTracker best;
  auto offer = [&](VertexSet kept) {
    if (!feasible(g, kept, problem)) return;
    best.offer(all - kept, g.weight_of(all - kept));
  };

  // Non-mixed solutions: a plain transversal (3P1+P2-free graphs are
  // 4P2-free), or removing every terminal.
  Solution plain = problem == Problem::OCT ? weighted_oct_sp2(g, 4)
                                           : weighted_fvs_sp2(g, 4);
  offer(all - plain.removed);
  offer(all - g.terminals());

  if (problem == Problem::OCT) two_clique_candidates(g, offer);
  bounded_core_candidates(g, problem, offer);
  two_component_candidates(g, problem, offer);

  return {best.removed, best.w, problem};
}

}  // namespace

Solution wsoct_3p1p2(const Instance& g) {
  return subset_transversal_3p1p2(g, Problem::OCT);
}

Solution wsfvs_3p1p2(const Instance& g) {
  return subset_transversal_3p1p2(g, Problem::FVS);
}

namespace {

// Per-co-component dispatch for the P1+P3-free solvers. Each co-component is
// P3-free or 3P1-free (complement components of a paw-free complement are
// triangle-free or complete multipartite).

Solution solve_cocomponent(const Instance& sub, Problem problem) {
  auto built = build_cotree(sub);
  if (std::holds_alternative<Cotree>(built)) {
    const Cotree& tree = std::get<Cotree>(built);
    return problem == Problem::OCT ? wsoct_cograph(sub, tree)
                                   : wsfvs_cograph(sub, tree);
  }
  return problem == Problem::OCT ? wsoct_3p1p2(sub) : wsfvs_3p1p2(sub);
}

SetSolution mwis_cocomponent(const Instance& sub) {
  if (!contains_induced(sub, patterns::p3()))
    return mwis_small(sub, SmallClass::P3Free);
  return mwis_small(sub, SmallClass::ThreeP1Free);
}

SetSolution wsis_cocomponent(const Instance& sub) {
  if (!contains_induced(sub, patterns::p3())) return wsis_p3free(sub);
  return wsis_3p1free(sub);
}

// Max-weight vertex of `from`, ties to the smaller id; -1 if empty.
int heaviest(const Instance& g, VertexSet from) {
  int pick = -1;
  from.for_each([&](int v) {
    if (pick < 0 || g.weight(v) > g.weight(pick)) pick = v;
  });
  return pick;
}

Solution subset_transversal_p1p3(const Instance& g, Problem problem) {
  require_free(g, patterns::p1_p3());
  const VertexSet all = g.vertices(), t = g.terminals();
  BestTracker best;
  auto offer = [&](VertexSet kept) {
    if (!feasible(g, kept, problem)) return;
    best.offer(all - kept, g.weight_of(all - kept));
  };

  offer(all - t);

  const std::vector<VertexSet> cocomps = co_components(g);
  std::vector<InducedSubgraph> subs;
  subs.reserve(cocomps.size());
  for (VertexSet d : cocomps) subs.push_back(induced_subgraph(g, d));

  auto map_back = [&](const InducedSubgraph& sub, VertexSet local) {
    VertexSet out;
    local.for_each([&](int v) { out.set(sub.to_original[static_cast<std::size_t>(v)]); });
    return out;
  };

  // A kept set containing a terminal lives inside at most two co-components;
  // single co-components are solved recursively.
  for (const InducedSubgraph& sub : subs) {
    Solution s = solve_cocomponent(sub.graph, problem);
    offer(map_back(sub, sub.graph.vertices() - s.removed));
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      const InducedSubgraph& a = subs[i];
      const InducedSubgraph& b = subs[j];
      VertexSet mwis_a = map_back(a, mwis_cocomponent(a.graph).vertices);
      VertexSet mwis_b = map_back(b, mwis_cocomponent(b.graph).vertices);
      int any_a = heaviest(g, cocomps[i]);
      int any_b = heaviest(g, cocomps[j]);
      int nont_a = heaviest(g, cocomps[i] - t);
      int nont_b = heaviest(g, cocomps[j] - t);

      if (problem == Problem::OCT) {
        offer(mwis_a | mwis_b);
        if (nont_a >= 0)
          offer(VertexSet::single(nont_a) | map_back(b, wsis_cocomponent(b.graph).vertices));
        if (nont_b >= 0)
          offer(VertexSet::single(nont_b) | map_back(a, wsis_cocomponent(a.graph).vertices));
      } else {
        if (any_a >= 0) offer(VertexSet::single(any_a) | mwis_b);
        if (any_b >= 0) offer(VertexSet::single(any_b) | mwis_a);
        if (nont_a >= 0)
          offer(VertexSet::single(nont_a) | map_back(b, wsis_cocomponent(b.graph).vertices));
        if (nont_b >= 0)
          offer(VertexSet::single(nont_b) | map_back(a, wsis_cocomponent(a.graph).vertices));
      }
    }
  }

  return {best.removed, best.w, problem};
}

}  // namespace

Solution wsoct_p1p3(const Instance& g) {
  return subset_transversal_p1p3(g, Problem::OCT);
}

Solution wsfvs_p1p3(const Instance& g) {
  return subset_transversal_p1p3(g, Problem::FVS);
}

SolveResult solve(const Instance& g, Problem problem, int oracle_cap) {
  const ClassLabel label = classify(g);
  oracle_cap = std::min(oracle_cap, kOracleCap);

  auto fallback = [&]() -> Solution {
    if (g.n() <= oracle_cap) return oracle_transversal(g, problem, oracle_cap);
    auto p4 = contains_induced(g, patterns::p4());
    throw UnsupportedInstance(p4 ? *p4 : std::vector<int>{});
  };

  Solution sol;
  switch (label.kind) {
    case ClassLabel::Kind::P4Free: {
      auto built = build_cotree(g);
      const Cotree& tree = std::get<Cotree>(built);
      sol = problem == Problem::OCT ? wsoct_cograph(g, tree)
                                    : wsfvs_cograph(g, tree);
      break;
    }
    case ClassLabel::Kind::P1P3Free:
      sol = problem == Problem::OCT ? wsoct_p1p3(g) : wsfvs_p1p3(g);
      break;
    case ClassLabel::Kind::ThreeP1P2Free:
      sol = problem == Problem::OCT ? wsoct_3p1p2(g) : wsfvs_3p1p2(g);
      break;
    case ClassLabel::Kind::SP2Free:
      if (g.terminals() == g.vertices()) {
        sol = problem == Problem::OCT ? weighted_oct_sp2(g, label.s)
                                      : weighted_fvs_sp2(g, label.s);
        sol.problem = problem;
      } else if (g.terminals().empty()) {
        sol = {VertexSet{}, 0, problem};
      } else {
        sol = fallback();
      }
      break;
    case ClassLabel::Kind::Unsupported:
      sol = fallback();
      break;
  }

  if (!solution_ok(g, sol)) throw std::logic_error("solve: invalid solution");
  return {sol, label};
}

}  // namespace wst
