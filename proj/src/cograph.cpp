#include "wst/cograph.hpp"

#include <stdexcept>

#include "wst/graph_core.hpp"
#include "wst/recognition.hpp"

namespace wst {
namespace {

std::vector<VertexSet> co_components_within(const Instance& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (rest.any()) {
    VertexSet comp = VertexSet::single(rest.first());
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next;
      frontier.for_each([&](int v) {
        next |= (s - g.neighbors(v)) - VertexSet::single(v);
      });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

}  // namespace

std::variant<Cotree, P4Witness> build_cotree(const Instance& g) {
  Cotree tree;
  bool failed = false;
  P4Witness witness{};

  auto make_internal = [&](CotreeNode::Kind kind, int left, int right) {
    CotreeNode node;
    node.kind = kind;
    node.left = left;
    node.right = right;
    node.vertices = tree.nodes[static_cast<std::size_t>(left)].vertices |
                    tree.nodes[static_cast<std::size_t>(right)].vertices;
    tree.nodes.push_back(node);
    return static_cast<int>(tree.nodes.size()) - 1;
  };

  auto rec = [&](auto&& self, VertexSet s) -> int {
    if (failed) return -1;
    if (s.count() == 1) {
      CotreeNode leaf;
      leaf.kind = CotreeNode::Kind::Leaf;
      leaf.vertex = s.first();
      leaf.vertices = s;
      tree.nodes.push_back(leaf);
      return static_cast<int>(tree.nodes.size()) - 1;
    }
    std::vector<VertexSet> parts = components(g, s);
    CotreeNode::Kind kind = CotreeNode::Kind::Union;
    if (parts.size() == 1) {
      parts = co_components_within(g, s);
      kind = CotreeNode::Kind::Join;
      if (parts.size() == 1) {
        // Connected and co-connected on >= 2 vertices: an induced P4 exists.
        InducedSubgraph sub = induced_subgraph(g, s);
        auto hit = contains_induced(sub.graph, patterns::p4());
        if (!hit) throw std::logic_error("cotree split failed without a P4");
        for (int i = 0; i < 4; ++i)
          witness[static_cast<std::size_t>(i)] =
              sub.to_original[static_cast<std::size_t>((*hit)[static_cast<std::size_t>(i)])];
        failed = true;
        return -1;
      }
    }
    int acc = self(self, parts[0]);
    for (std::size_t i = 1; i < parts.size() && !failed; ++i) {
      int child = self(self, parts[i]);
      if (failed) return -1;
      acc = make_internal(kind, acc, child);
    }
    return acc;
  };

  if (g.n() > 0) tree.root = rec(rec, g.vertices());
  if (failed) return witness;
  return tree;
}

Instance reconstruct(const Cotree& tree, const Instance& reference) {
  std::vector<std::pair<int, int>> edges;
  for (const CotreeNode& node : tree.nodes) {
    if (node.kind != CotreeNode::Kind::Join) continue;
    tree.nodes[static_cast<std::size_t>(node.left)].vertices.for_each([&](int u) {
      tree.nodes[static_cast<std::size_t>(node.right)].vertices.for_each([&](int v) {
        edges.emplace_back(std::min(u, v), std::max(u, v));
      });
    });
  }
  return Instance::build(reference.n(), edges, reference.weights(),
                         reference.terminals());
}

namespace {

struct NodeDp {
  VertexSet verts;
  Weight total = 0;
  VertexSet oct, fvs, vc;  // removed-form optimal sets
  Weight oct_w = 0, fvs_w = 0, vc_w = 0;
  VertexSet mwis;  // kept-form
  Weight mwis_w = 0;
  int best_any = -1;   // max-weight vertex, ties to the smaller id
  int best_nont = -1;  // same, restricted to non-terminals (-1 if none)

  VertexSet wsis() const { return verts - vc; }
  Weight wsis_w() const { return total - vc_w; }
};

struct Candidate {
  VertexSet removed;
  Weight w;
};

void keep_min(Candidate& best, VertexSet removed, Weight w) {
  if (w < best.w) best = {removed, w};
}

std::vector<NodeDp> run_dp(const Instance& g, const Cotree& tree) {
  const VertexSet t = g.terminals();
  std::vector<NodeDp> dp(tree.nodes.size());

  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const CotreeNode& node = tree.nodes[i];
    NodeDp& x = dp[i];
    x.verts = node.vertices;
    if (node.kind == CotreeNode::Kind::Leaf) {
      int v = node.vertex;
      x.total = g.weight(v);
      x.mwis = VertexSet::single(v);
      x.mwis_w = x.total;
      x.best_any = v;
      x.best_nont = t.test(v) ? -1 : v;
      continue;
    }

    const NodeDp& y = dp[static_cast<std::size_t>(node.left)];
    const NodeDp& z = dp[static_cast<std::size_t>(node.right)];
    x.total = y.total + z.total;

    auto better_vertex = [&](int a, int b) {
      if (a < 0) return b;
      if (b < 0) return a;
      if (g.weight(a) != g.weight(b)) return g.weight(a) > g.weight(b) ? a : b;
      return a < b ? a : b;
    };

    if (node.kind == CotreeNode::Kind::Union) {
      x.oct = y.oct | z.oct;
      x.oct_w = y.oct_w + z.oct_w;
      x.fvs = y.fvs | z.fvs;
      x.fvs_w = y.fvs_w + z.fvs_w;
      x.vc = y.vc | z.vc;
      x.vc_w = y.vc_w + z.vc_w;
      x.mwis = y.mwis | z.mwis;
      x.mwis_w = y.mwis_w + z.mwis_w;
      x.best_any = better_vertex(y.best_any, z.best_any);
      x.best_nont = better_vertex(y.best_nont, z.best_nont);
      continue;
    }

    // Join node.
    const VertexSet tx = t & x.verts;

    Candidate vc{y.vc | z.verts, y.vc_w + z.total};
    keep_min(vc, z.vc | y.verts, z.vc_w + y.total);
    keep_min(vc, tx, g.weight_of(tx));
    x.vc = vc.removed;
    x.vc_w = vc.w;

    if (z.mwis_w > y.mwis_w) {
      x.mwis = z.mwis;
      x.mwis_w = z.mwis_w;
    } else {
      x.mwis = y.mwis;
      x.mwis_w = y.mwis_w;
    }
    x.best_any = better_vertex(y.best_any, z.best_any);
    x.best_nont = better_vertex(y.best_nont, z.best_nont);

    // A kept set B = B_y u B_z with both sides nonempty and a surviving
    // terminal collapses: either one side is a single vertex, or both sides
    // are independent sets (any y-edge plus two z-vertices puts a terminal on
    // a short odd cycle). That gives the candidate families below; each is
    // feasible by construction.
    Candidate oct{y.oct | z.verts, y.oct_w + z.total};
    keep_min(oct, z.oct | y.verts, z.oct_w + y.total);
    keep_min(oct, tx, g.weight_of(tx));
    keep_min(oct, x.verts - (y.mwis | z.mwis), x.total - y.mwis_w - z.mwis_w);
    if (z.best_nont >= 0)
      keep_min(oct, x.verts - (y.wsis() | VertexSet::single(z.best_nont)),
               x.total - y.wsis_w() - g.weight(z.best_nont));
    if (y.best_nont >= 0)
      keep_min(oct, x.verts - (z.wsis() | VertexSet::single(y.best_nont)),
               x.total - z.wsis_w() - g.weight(y.best_nont));
    // Union of the children's T-vertex covers; not always feasible, so gate
    // it on the predicate.
    if (is_t_bipartite(g, x.verts - (y.vc | z.vc)))
      keep_min(oct, y.vc | z.vc, y.vc_w + z.vc_w);
    x.oct = oct.removed;
    x.oct_w = oct.w;

    // T-forest version: a cycle needs only two vertices on each side, so a
    // surviving terminal forces one side down to a single vertex.
    Candidate fvs{y.fvs | z.verts, y.fvs_w + z.total};
    keep_min(fvs, z.fvs | y.verts, z.fvs_w + y.total);
    keep_min(fvs, tx, g.weight_of(tx));
    if (z.best_any >= 0)
      keep_min(fvs, x.verts - (y.mwis | VertexSet::single(z.best_any)),
               x.total - y.mwis_w - g.weight(z.best_any));
    if (y.best_any >= 0)
      keep_min(fvs, x.verts - (z.mwis | VertexSet::single(y.best_any)),
               x.total - z.mwis_w - g.weight(y.best_any));
    if (z.best_nont >= 0)
      keep_min(fvs, x.verts - (y.wsis() | VertexSet::single(z.best_nont)),
               x.total - y.wsis_w() - g.weight(z.best_nont));
    if (y.best_nont >= 0)
      keep_min(fvs, x.verts - (z.wsis() | VertexSet::single(y.best_nont)),
               x.total - z.wsis_w() - g.weight(y.best_nont));
    x.fvs = fvs.removed;
    x.fvs_w = fvs.w;
  }
  return dp;
}

void check_tree(const Instance& g, const Cotree& tree) {
  if (tree.root < 0 ||
      tree.nodes[static_cast<std::size_t>(tree.root)].vertices != g.vertices())
    throw std::invalid_argument("cotree does not match the instance");
}

}  // namespace

SetSolution wsvc_cograph(const Instance& g, const Cotree& tree) {
  if (g.n() == 0) return {};
  check_tree(g, tree);
  std::vector<NodeDp> dp = run_dp(g, tree);
  const NodeDp& root = dp[static_cast<std::size_t>(tree.root)];
  return {root.vc, root.vc_w};
}

Solution wsoct_cograph(const Instance& g, const Cotree& tree) {
  if (g.n() == 0) return {{}, 0, Problem::OCT};
  check_tree(g, tree);
  std::vector<NodeDp> dp = run_dp(g, tree);
  const NodeDp& root = dp[static_cast<std::size_t>(tree.root)];
  Solution sol{root.oct, root.oct_w, Problem::OCT};
  if (!solution_ok(g, sol))
    throw std::logic_error("wsoct_cograph produced an infeasible solution");
  return sol;
}

Solution wsfvs_cograph(const Instance& g, const Cotree& tree) {
  if (g.n() == 0) return {{}, 0, Problem::FVS};
  check_tree(g, tree);
  std::vector<NodeDp> dp = run_dp(g, tree);
  const NodeDp& root = dp[static_cast<std::size_t>(tree.root)];
  Solution sol{root.fvs, root.fvs_w, Problem::FVS};
  if (!solution_ok(g, sol))
    throw std::logic_error("wsfvs_cograph produced an infeasible solution");
  return sol;
}

}  // namespace wst
