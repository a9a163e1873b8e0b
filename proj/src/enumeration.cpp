#include "wst/enumeration.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "wst/graph_core.hpp"

namespace wst {
namespace {

std::size_t visit_sorted(std::vector<std::uint64_t>& masks, const SetVisitor& visit) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::size_t count = 0;
  for (std::uint64_t m : masks) {
    ++count;
    if (!visit(VertexSet{m})) break;
  }
  return count;
}

int edges_within(const Instance& g, VertexSet s) {
  int twice = 0;
  s.for_each([&](int v) { twice += (g.neighbors(v) & s).count(); });
  return twice / 2;
}

bool induces_forest(const Instance& g, VertexSet s) {
  return edges_within(g, s) == s.count() - static_cast<int>(components(g, s).size());
}

// Some shortest cycle of G[keep] as a vertex set (shortest over the BFS
// starts; exact girth is not needed, small branching is).
VertexSet find_short_cycle(const Instance& g, VertexSet keep) {
  VertexSet best;
  int best_len = kMaxVertices + 1;
  keep.for_each([&](int s) {
    std::array<int, kMaxVertices> parent{};
    std::array<int, kMaxVertices> depth{};
    parent.fill(-2);
    parent[static_cast<std::size_t>(s)] = -1;
    depth[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      bool done = false;
      (g.neighbors(u) & keep).for_each([&](int v) {
        if (done) return;
        if (parent[static_cast<std::size_t>(v)] == -2) {
          parent[static_cast<std::size_t>(v)] = u;
          depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        } else if (v != parent[static_cast<std::size_t>(u)]) {
          // Walk both endpoints up to their meeting point; the two tree paths
          // plus the edge uv form a simple cycle.
          std::vector<int> pu, pv;
          for (int x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) pu.push_back(x);
          for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) pv.push_back(x);
          while (pu.size() > 1 && pv.size() > 1 &&
                 pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          VertexSet cyc;
          for (int x : pu) cyc.set(x);
          for (int x : pv) cyc.set(x);
          if (cyc.count() >= 3 && cyc.count() < best_len) {
            best = cyc;
            best_len = cyc.count();
          }
          done = true;
        }
      });
      if (done) break;
    }
  });
  return best;
}

}  // namespace

std::size_t enum_maximal_independent_sets(const Instance& g, VertexSet keep,
                                          const SetVisitor& visit) {
  std::vector<std::uint64_t> level{0};
  VertexSet processed;
  keep.for_each([&](int v) {
    processed.set(v);
    VertexSet nbhd = g.neighbors(v) & processed;
    std::vector<std::uint64_t> next;
    next.reserve(level.size() * 2);
    for (std::uint64_t raw : level) {
      VertexSet s{raw};
      if (!s.intersects(nbhd)) {
        next.push_back((s | VertexSet::single(v)).bits);
        continue;
      }
      next.push_back(s.bits);  // still maximal: v is blocked by a neighbor in s
      VertexSet grown = (s - g.neighbors(v)) | VertexSet::single(v);
      bool maximal = true;
      (processed - grown).for_each([&](int u) {
        if (!g.neighbors(u).intersects(grown)) maximal = false;
      });
      if (maximal) next.push_back(grown.bits);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  });
  return visit_sorted(level, visit);
}

std::size_t enum_maximal_induced_forests(const Instance& g,
                                         const SetVisitor& visit) {
  const VertexSet all = g.vertices();
  std::set<std::uint64_t> explored;
  std::vector<std::uint64_t> forests;

  auto minimalize = [&](VertexSet removed) {
    bool changed = true;
    while (changed) {
      changed = false;
      removed.for_each([&](int x) {
        if (changed) return;
        VertexSet back = (all - removed) | VertexSet::single(x);
        if (induces_forest(g, back)) {
          removed.reset(x);
          changed = true;
        }
      });
    }
    return removed;
  };

  auto rec = [&](auto&& self, VertexSet removed) -> void {
    if (!explored.insert(removed.bits).second) return;
    VertexSet cycle = find_short_cycle(g, all - removed);
    if (cycle.empty()) {
      forests.push_back((all - minimalize(removed)).bits);
      return;
    }
    cycle.for_each([&](int v) { self(self, removed | VertexSet::single(v)); });
  };
  rec(rec, VertexSet{});

  return visit_sorted(forests, visit);
}

}  // namespace wst
