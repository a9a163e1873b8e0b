#include "wst/aux_solvers.hpp"

#include <doctest.h>

#include "test_support.hpp"
#include "wst/oracle.hpp"
#include "wst/recognition.hpp"

using namespace wst;
using namespace wst::testing;

namespace {

// Rejection-sample a random graph avoiding the given pattern.
Instance random_free(Rng& rng, const PatternGraph& pattern, int n, double p,
                     double terminal_density = 0.4) {
  for (;;) {
    Instance g = random_graph(n, p, rng, 10, terminal_density);
    if (!contains_induced(g, pattern)) return g;
  }
}

// Random disjoint union of cliques (P3-free by construction).
Instance random_cluster(Rng& rng, int n, double terminal_density = 0.4) {
  std::vector<int> group(static_cast<std::size_t>(n));
  int groups = n == 0 ? 1 : rng.range(1, n);
  for (int v = 0; v < n; ++v) group[static_cast<std::size_t>(v)] = rng.range(0, groups - 1);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (group[static_cast<std::size_t>(u)] == group[static_cast<std::size_t>(v)])
        e.emplace_back(u, v);
  std::vector<Weight> w(static_cast<std::size_t>(n));
  for (Weight& x : w) x = rng.below(11);
  VertexSet t;
  for (int v = 0; v < n; ++v)
    if (rng.chance(terminal_density)) t.set(v);
  return Instance::build(n, e, w, t);
}

}  // namespace

TEST_CASE("wsis on 3P1-free graphs: examples") {
  Instance c4 = cycle(4).with_terminals(cycle(4).vertices());
  CHECK(wsis_3p1free(c4).weight == 2);

  Instance k4 = complete(4).with_terminals(complete(4).vertices());
  CHECK(wsis_3p1free(k4).weight == 1);

  CHECK_THROWS_AS(wsis_3p1free(edgeless(4)), ClassViolation);
  try {
    wsis_3p1free(edgeless(5));
  } catch (const ClassViolation& e) {
    CHECK(e.required_class() == "3P1-free");
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("wsis_3p1free matches the oracle") {
  Rng rng(83);
  for (int it = 0; it < 120; ++it) {
    Instance g = random_free(rng, patterns::three_p1(), rng.range(1, 14), 0.75, 0.5);
    SetSolution got = wsis_3p1free(g);
    CHECK(got.weight == oracle_subset_is_vc(g, SubsetProblem::WSIS).weight);
    CHECK(is_t_independent(g, got.vertices));
    CHECK(g.weight_of(got.vertices) == got.weight);
  }
}

TEST_CASE("mwis on the two small classes") {
  // K3 + K2 is P3-free.
  Instance cluster = Instance::simple(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
  CHECK(mwis_small(cluster, SmallClass::P3Free).weight == 2);
  CHECK(mwis_small(cycle(4), SmallClass::ThreeP1Free).weight == 2);
  CHECK_THROWS_AS(mwis_small(path(3), SmallClass::P3Free), ClassViolation);
  CHECK_THROWS_AS(mwis_small(edgeless(3), SmallClass::ThreeP1Free), ClassViolation);

  Rng rng(89);
  for (int it = 0; it < 80; ++it) {
    Instance g = random_free(rng, patterns::three_p1(), rng.range(1, 14), 0.75);
    CHECK(mwis_small(g, SmallClass::ThreeP1Free).weight == brute::mwis(g).weight);
  }
  for (int it = 0; it < 80; ++it) {
    Instance g = random_cluster(rng, rng.range(1, 14));
    CHECK(mwis_small(g, SmallClass::P3Free).weight == brute::mwis(g).weight);
  }
}

TEST_CASE("wsis on P3-free graphs via complementation") {
  Instance k3 = complete(3).with_terminals(VertexSet::of({0}));
  SetSolution s = wsis_p3free(k3);
  CHECK(s.weight == 2);

  CHECK(wsis_p3free(edgeless(5)).vertices == edgeless(5).vertices());

  Rng rng(97);
  for (int it = 0; it < 100; ++it) {
    Instance g = random_cluster(rng, rng.range(0, 14), 0.5);
    SetSolution got = wsis_p3free(g);
    CHECK(got.weight == oracle_subset_is_vc(g, SubsetProblem::WSIS).weight);
    CHECK(is_t_independent(g, got.vertices));
    // complementation identity
    CHECK(got.weight + oracle_subset_is_vc(g, SubsetProblem::WSVC).weight ==
          g.total_weight());
  }
}

TEST_CASE("3P1-free structure: non-neighborhoods are cliques") {
  Rng rng(103);
  for (int it = 0; it < 60; ++it) {
    Instance g = random_free(rng, patterns::three_p1(), rng.range(1, 14), 0.75);
    for (int v = 0; v < g.n(); ++v) {
      VertexSet outside = g.vertices() - g.closed_neighborhood(v);
      outside.for_each([&](int u) {
        CHECK(g.neighbors(u).contains(outside - VertexSet::single(u)));
      });
    }
  }
}
