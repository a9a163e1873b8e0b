#include "wst/mincut.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wst/graph_core.hpp"

namespace wst {
namespace {

// Dinic with the usual paired-edge residual representation.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(static_cast<std::size_t>(n)) {}

  void add_arc(int from, int to, Weight cap) {
    head_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    head_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  Weight max_flow(int s, int t) {
    Weight total = 0;
    while (bfs(s, t)) {
      iter_.assign(head_.size(), 0);
      while (Weight pushed = dfs(s, t, std::numeric_limits<Weight>::max()))
        total += pushed;
    }
    return total;
  }

  // Vertices reachable from s in the residual network (valid after max_flow).
  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int id : head_[static_cast<std::size_t>(u)]) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
          seen[static_cast<std::size_t>(a.to)] = true;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    Weight cap;
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::vector<int> queue{s};
    level_[static_cast<std::size_t>(s)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int id : head_[static_cast<std::size_t>(u)]) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  Weight dfs(int u, int t, Weight limit) {
    if (u == t) return limit;
    for (std::size_t& i = iter_[static_cast<std::size_t>(u)];
         i < head_[static_cast<std::size_t>(u)].size(); ++i) {
      int id = head_[static_cast<std::size_t>(u)][i];
      Arc& a = arcs_[static_cast<std::size_t>(id)];
      if (a.cap == 0 || level_[static_cast<std::size_t>(a.to)] !=
                            level_[static_cast<std::size_t>(u)] + 1)
        continue;
      Weight pushed = dfs(a.to, t, std::min(limit, a.cap));
      if (pushed > 0) {
        a.cap -= pushed;
        arcs_[static_cast<std::size_t>(id ^ 1)].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace

CutResult min_weight_vertex_cut(const CutQuery& q) {
  const Instance& g = q.inst;
  if (q.t1 == q.t2 || q.t1 < 0 || q.t1 >= g.n() || q.t2 < 0 || q.t2 >= g.n())
    throw std::invalid_argument("cut terminals must be distinct vertices");

  CutResult out;
  if (g.adjacent(q.t1, q.t2)) {
    out.feasible = false;
    return out;
  }

  // v_in = 2v, v_out = 2v + 1. "Uncapacitated" is one more than the total
  // vertex weight, which no cut-respecting flow can reach.
  const Weight inf = g.total_weight() + 1;
  FlowNetwork net(2 * g.n());
  for (int v = 0; v < g.n(); ++v)
    net.add_arc(2 * v, 2 * v + 1, (v == q.t1 || v == q.t2) ? inf : g.weight(v));
  for (auto [u, v] : g.edges()) {
    net.add_arc(2 * u + 1, 2 * v, inf);
    net.add_arc(2 * v + 1, 2 * u, inf);
  }

  int source = 2 * q.t1 + 1, sink = 2 * q.t2;
  out.max_flow = net.max_flow(source, sink);

  std::vector<bool> reach = net.residual_reachable(source);
  for (int v = 0; v < g.n(); ++v)
    if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)])
      out.separator.set(v);
  out.weight = g.weight_of(out.separator);

  if (out.weight != out.max_flow)
    throw std::logic_error("vertex cut: separator weight disagrees with flow value");
  VertexSet rest = g.vertices() - out.separator;
  bool separated = true;
  for (VertexSet comp : components(g, rest))
    if (comp.test(q.t1) && comp.test(q.t2)) separated = false;
  if (!separated)
    throw std::logic_error("vertex cut: separator does not separate the terminals");
  return out;
}

CutResult min_weight_vertex_cut(const Instance& g, int t1, int t2) {
  return min_weight_vertex_cut(CutQuery{g, t1, t2});
}

}  // namespace wst
