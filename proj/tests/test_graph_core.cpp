#include "wst/graph_core.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace wst;
using namespace wst::testing;

TEST_CASE("induced subgraph basics") {
  Instance k3 = complete(3);
  InducedSubgraph sub = induced_subgraph(k3, VertexSet::of({0, 1}));
  CHECK(sub.graph.n() == 2);
  CHECK(sub.graph.m() == 1);
  CHECK(sub.to_original == std::vector<int>{0, 1});

  Instance c5 = cycle(5);
  InducedSubgraph whole = induced_subgraph(c5, c5.vertices());
  CHECK(whole.graph == c5);

  InducedSubgraph p = induced_subgraph(c5, VertexSet::of({0, 1, 2, 3}));
  CHECK(p.graph.m() == 3);  // a P4
  CHECK(p.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

  CHECK(induced_subgraph(c5, VertexSet{}).graph.n() == 0);
}

TEST_CASE("induced subgraph composes") {
  Rng rng(7);
  for (int it = 0; it < 50; ++it) {
    Instance g = random_graph(9, 0.4, rng);
    VertexSet a{rng.next() & g.vertices().bits};
    InducedSubgraph ga = induced_subgraph(g, a);
    VertexSet b_new{rng.next() & ga.graph.vertices().bits};
    InducedSubgraph gab = induced_subgraph(ga.graph, b_new);
    VertexSet b_old;
    b_new.for_each([&](int v) { b_old.set(ga.to_original[static_cast<std::size_t>(v)]); });
    CHECK(gab.graph == induced_subgraph(g, b_old).graph);
  }
}

TEST_CASE("co-components") {
  Instance k22 = Instance::simple(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto cc = co_components(k22);
  REQUIRE(cc.size() == 2);
  CHECK(cc[0] == VertexSet::of({0, 1}));
  CHECK(cc[1] == VertexSet::of({2, 3}));

  CHECK(co_components(edgeless(4)).size() == 1);
  CHECK(co_components(complete(4)).size() == 4);
}

TEST_CASE("co-components cross pairs are edges") {
  Rng rng(11);
  for (int it = 0; it < 100; ++it) {
    Instance g = random_graph(rng.range(0, 10), 0.5, rng);
    auto cc = co_components(g);
    VertexSet all;
    for (VertexSet part : cc) all |= part;
    CHECK(all == g.vertices());
    for (std::size_t i = 0; i < cc.size(); ++i)
      for (std::size_t j = i + 1; j < cc.size(); ++j)
        cc[i].for_each([&](int u) {
          CHECK(cc[j].contains(cc[j] & g.neighbors(u)));
          CHECK(g.neighbors(u).contains(cc[j]));
        });
  }
}

TEST_CASE("block decomposition shapes") {
  // Two triangles sharing vertex 0.
  Instance bowtie = Instance::simple(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  BlockDecomposition bd = block_decomposition(bowtie, bowtie.vertices());
  REQUIRE(bd.blocks.size() == 2);
  CHECK(!bd.blocks[0].bipartite);
  CHECK(!bd.blocks[1].bipartite);
  CHECK(bd.blocks_of[0].size() == 2);

  Instance tree = path(6);
  BlockDecomposition td = block_decomposition(tree, tree.vertices());
  CHECK(td.blocks.size() == 5);
  for (const Block& b : td.blocks) {
    CHECK(b.bipartite);
    CHECK(!b.has_cycle);
    CHECK(b.vertices.count() == 2);
  }

  Instance c4 = cycle(4);
  BlockDecomposition cd = block_decomposition(c4, c4.vertices());
  REQUIRE(cd.blocks.size() == 1);
  CHECK(cd.blocks[0].bipartite);
  CHECK(cd.blocks[0].has_cycle);
}

TEST_CASE("every edge lies in exactly one block") {
  Rng rng(5);
  for (int it = 0; it < 100; ++it) {
    Instance g = random_graph(rng.range(1, 10), 0.4, rng);
    BlockDecomposition bd = block_decomposition(g, g.vertices());
    for (auto [u, v] : g.edges()) {
      int hits = 0;
      for (const Block& b : bd.blocks)
        if (b.vertices.test(u) && b.vertices.test(v)) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("t-bipartite and t-forest examples") {
  Instance k3 = complete(3).with_terminals(VertexSet::of({0}));
  CHECK(!is_t_bipartite(k3, k3.vertices()));
  CHECK(is_t_bipartite(complete(3), complete(3).vertices()));  // T empty

  Instance c4 = cycle(4).with_terminals(VertexSet::of({0}));
  CHECK(!is_t_forest(c4, c4.vertices()));
  CHECK(is_t_forest(cycle(4), cycle(4).vertices()));
  CHECK(is_t_bipartite(c4, c4.vertices()));

  Instance tr = path(7).with_terminals(VertexSet::of({0, 3, 6}));
  CHECK(is_t_forest(tr, tr.vertices()));
}

TEST_CASE("petersen graph transversal from the classic picture") {
  // Outer square terminals at 0 (on the outer cycle) and inner ones per the
  // standard illustration; removing the three black vertices leaves a graph
  // whose odd cycles avoid the terminals.
  Instance g = petersen().with_terminals(VertexSet::of({5, 0, 1, 2}));
  VertexSet black = VertexSet::of({5, 1, 3});
  CHECK(is_t_bipartite(g, g.vertices() - black));
  CHECK(is_t_forest(g, g.vertices() - black));
  CHECK(!is_t_bipartite(g, g.vertices()));

  // Second variant: the transversal may sit inside T itself.
  VertexSet black2 = VertexSet::of({5, 0, 2});
  CHECK(is_t_bipartite(g, g.vertices() - black2));
  CHECK(g.terminals().contains(black2));
}

TEST_CASE("feasibility predicates match explicit cycle enumeration") {
  Rng rng(23);
  for (int it = 0; it < 150; ++it) {
    int n = rng.range(0, 10);
    Instance g = random_graph(n, 0.35, rng, 5, 0.5);
    VertexSet keep{rng.next() & g.vertices().bits};
    CHECK(is_t_bipartite(g, keep) == !brute::has_t_cycle(g, keep, true));
    CHECK(is_t_forest(g, keep) == !brute::has_t_cycle(g, keep, false));
  }
  // denser, smaller
  for (int it = 0; it < 150; ++it) {
    int n = rng.range(0, 7);
    Instance g = random_graph(n, 0.6, rng, 5, 0.5);
    VertexSet keep{rng.next() & g.vertices().bits};
    CHECK(is_t_bipartite(g, keep) == !brute::has_t_cycle(g, keep, true));
    CHECK(is_t_forest(g, keep) == !brute::has_t_cycle(g, keep, false));
  }
}

TEST_CASE("classify_or examples") {
  // Triangle 0,1,2 plus pendant 3 attached to 0; the pendant is the terminal.
  Instance g = Instance::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}},
                               {1, 1, 1, 1}, VertexSet::of({3}));
  SolutionDecomposition d = classify_or(g, g.vertices(), OrMode::Odd);
  CHECK(d.odd == VertexSet::of({0, 1, 2}));
  CHECK(d.even == VertexSet::of({3}));
  CHECK(d.mixed);

  SolutionDecomposition dc = classify_or(g, g.vertices(), OrMode::Cycle);
  CHECK(dc.odd == VertexSet::of({0, 1, 2}));
  CHECK(dc.mixed);

  Instance c4 = cycle(4).with_terminals(VertexSet::of({1}));
  SolutionDecomposition b = classify_or(c4, c4.vertices(), OrMode::Odd);
  CHECK(b.odd.empty());
  CHECK(!b.mixed);

  // Two disjoint triangles, no terminals.
  Instance two = Instance::simple(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  SolutionDecomposition t = classify_or(two, two.vertices(), OrMode::Odd);
  CHECK(t.odd == two.vertices());
  CHECK(t.even.empty());
  CHECK(!t.mixed);

  Instance k3 = complete(3).with_terminals(VertexSet::of({0}));
  CHECK_THROWS_AS(classify_or(k3, k3.vertices(), OrMode::Odd), std::invalid_argument);
}

TEST_CASE("classify_or partitions and protects terminals") {
  Rng rng(31);
  int done = 0;
  for (int it = 0; it < 400 && done < 120; ++it) {
    Instance g = random_graph(rng.range(1, 10), 0.3, rng, 5, 0.4);
    for (OrMode mode : {OrMode::Odd, OrMode::Cycle}) {
      VertexSet keep{rng.next() & g.vertices().bits};
      bool ok = mode == OrMode::Odd ? is_t_bipartite(g, keep) : is_t_forest(g, keep);
      if (!ok) continue;
      SolutionDecomposition d = classify_or(g, keep, mode);
      CHECK((d.odd | d.even) == keep);
      CHECK((d.odd & d.even).empty());
      CHECK(d.even.contains(keep & g.terminals()));
      CHECK(d.mixed == (d.odd.any() && d.even.intersects(g.terminals())));
      ++done;
    }
  }
  CHECK(done >= 120);
}

TEST_CASE("the 64-vertex capacity boundary works") {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < 64; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, 63);
  Instance c64 = Instance::simple(64, e).with_terminals(VertexSet::of({0, 31, 63}));
  CHECK(c64.vertices().count() == 64);
  CHECK(is_t_bipartite(c64, c64.vertices()));   // even cycle
  CHECK(!is_t_forest(c64, c64.vertices()));
  CHECK(block_decomposition(c64, c64.vertices()).blocks.size() == 1);
  CHECK(components(c64, c64.vertices()).size() == 1);
  CHECK_THROWS_AS(Instance::simple(65, {}), std::invalid_argument);
}

TEST_CASE("empty graphs and empty keeps are fine everywhere") {
  Instance g;
  CHECK(is_t_bipartite(g, VertexSet{}));
  CHECK(is_t_forest(g, VertexSet{}));
  CHECK(co_components(g).empty());
  CHECK(block_decomposition(g, VertexSet{}).blocks.empty());
  Instance k3 = complete(3).with_terminals(VertexSet::of({0}));
  CHECK(is_t_bipartite(k3, VertexSet{}));
}
