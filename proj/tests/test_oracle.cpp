#include "wst/oracle.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace wst;
using namespace wst::testing;

TEST_CASE("oracle transversal examples") {
  Instance k3 = complete(3).with_terminals(VertexSet::of({0}));
  CHECK(oracle_transversal(k3, Problem::OCT).weight == 1);

  Instance c4 = cycle(4).with_terminals(cycle(4).vertices());
  CHECK(oracle_transversal(c4, Problem::OCT).weight == 0);
  CHECK(oracle_transversal(c4, Problem::FVS).weight == 1);

  Instance k4 = complete(4).with_terminals(complete(4).vertices());
  CHECK(oracle_transversal(k4, Problem::FVS).weight == 2);
  CHECK(oracle_transversal(k4, Problem::OCT).weight == 2);

  CHECK_THROWS_AS(oracle_transversal(edgeless(30), Problem::OCT),
                  std::invalid_argument);
}

TEST_CASE("oracle returns a valid, lexicographically smallest optimum") {
  Rng rng(17);
  for (int it = 0; it < 60; ++it) {
    Instance g = random_graph(rng.range(0, 9), 0.45, rng, 6, 0.5);
    for (Problem problem : {Problem::OCT, Problem::FVS}) {
      Solution sol = oracle_transversal(g, problem);
      CHECK(solution_ok(g, sol));
      auto all = brute::all_optimal_transversals(g, problem);
      REQUIRE(!all.empty());
      CHECK(g.weight_of(all.front()) == sol.weight);
      VertexSet lex = all.front();
      for (VertexSet s : all)
        if (s.lex_less(lex)) lex = s;
      CHECK(sol.removed == lex);
    }
  }
}

TEST_CASE("oracle vertex cut examples") {
  // path t1 - b - t2 with w(b) = 7
  Instance p = Instance::build(3, {{0, 1}, {1, 2}}, {1, 7, 1}, VertexSet{});
  CutResult r = oracle_vertex_cut(p, 0, 2);
  CHECK(r.feasible);
  CHECK(r.weight == 7);
  CHECK(r.separator == VertexSet::of({1}));

  Instance two = edgeless(4);
  CutResult r2 = oracle_vertex_cut(two, 0, 3);
  CHECK(r2.weight == 0);
  CHECK(r2.separator.empty());

  // K4 minus the edge t1t2
  Instance k4 = complete(4).without_edge(0, 1);
  CutResult r3 = oracle_vertex_cut(k4, 0, 1);
  CHECK(r3.weight == 2);

  CHECK(!oracle_vertex_cut(complete(3), 0, 1).feasible);
}

TEST_CASE("oracle subset independent set / vertex cover examples") {
  Instance c4 = cycle(4).with_terminals(cycle(4).vertices());
  CHECK(oracle_subset_is_vc(c4, SubsetProblem::WSIS).weight == 2);

  Instance empty5 = edgeless(5).with_terminals(VertexSet::of({1, 2}));
  CHECK(oracle_subset_is_vc(empty5, SubsetProblem::WSVC).weight == 0);

  Instance k3 = complete(3).with_terminals(VertexSet::of({0}));
  SetSolution vc = oracle_subset_is_vc(k3, SubsetProblem::WSVC);
  CHECK(vc.weight == 1);
  CHECK(vc.vertices == VertexSet::of({0}));
}

TEST_CASE("oracle invariants") {
  Rng rng(29);
  for (int it = 0; it < 60; ++it) {
    Instance g = random_graph(rng.range(0, 9), 0.4, rng, 6, 0.5);

    // WSIS and WSVC weights are complementary.
    Weight wsis = oracle_subset_is_vc(g, SubsetProblem::WSIS).weight;
    Weight wsvc = oracle_subset_is_vc(g, SubsetProblem::WSVC).weight;
    CHECK(wsis + wsvc == g.total_weight());

    // FVS optimum dominates OCT optimum.
    Weight oct = oracle_transversal(g, Problem::OCT).weight;
    Weight fvs = oracle_transversal(g, Problem::FVS).weight;
    CHECK(fvs >= oct);

    // T = {} makes everything free.
    Instance free_t = g.with_terminals(VertexSet{});
    CHECK(oracle_transversal(free_t, Problem::FVS).weight == 0);

    // Growing T never helps.
    VertexSet bigger = g.terminals() | VertexSet{rng.next() & g.vertices().bits};
    Instance harder = g.with_terminals(bigger);
    CHECK(oracle_transversal(harder, Problem::OCT).weight >= oct);
    CHECK(oracle_transversal(harder, Problem::FVS).weight >= fvs);

    // Zero weights make everything free.
    Instance zero = Instance::build(
        g.n(), g.edges(), std::vector<Weight>(static_cast<std::size_t>(g.n()), 0),
        g.terminals());
    CHECK(oracle_transversal(zero, Problem::OCT).weight == 0);
    if (g.n() >= 2) CHECK(oracle_vertex_cut(zero, 0, 1, kOracleCap).weight == 0);
  }
}
