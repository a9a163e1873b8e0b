#include "wst/instance.hpp"

#include <stdexcept>
#include <string>

namespace wst {

Instance Instance::build(int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<Weight>& weights,
                         VertexSet terminals) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxVertices) + "]");
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " weights, got " +
                                std::to_string(weights.size()));
  for (int v = 0; v < n; ++v) {
    if (weights[static_cast<std::size_t>(v)] > kMaxVertexWeight)
      throw std::invalid_argument("weight of vertex " + std::to_string(v) +
                                  " exceeds 2^32-1");
  }
  Instance g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), 0);
  g.weights_ = weights;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v))
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    ++g.m_;
  }
  if (!VertexSet::all(n).contains(terminals))
    throw std::invalid_argument("terminal out of range");
  g.terminals_ = terminals;
  return g;
}

Instance Instance::simple(int n, const std::vector<std::pair<int, int>>& edges) {
  return build(n, edges, std::vector<Weight>(static_cast<std::size_t>(n), 1),
               VertexSet{});
}

VertexSet Instance::neighborhood_of(VertexSet s) const {
  VertexSet out;
  s.for_each([&](int v) { out |= neighbors(v); });
  return out - s;
}

Weight Instance::weight_of(VertexSet s) const {
  Weight w = 0;
  s.for_each([&](int v) { w += weight(v); });
  return w;
}

std::vector<std::pair<int, int>> Instance::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    VertexSet higher = neighbors(u) - VertexSet::all(u + 1);
    higher.for_each([&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Instance Instance::scaled(Weight factor) const {
  std::vector<Weight> w = weights_;
  for (Weight& x : w) {
    if (factor != 0 && x > kMaxVertexWeight / factor)
      throw std::invalid_argument("scaled weight exceeds 2^32-1");
    x *= factor;
  }
  return build(n_, edges(), w, terminals_);
}

Instance Instance::with_terminals(VertexSet terminals) const {
  return build(n_, edges(), weights_, terminals);
}

Instance Instance::without_edge(int u, int v) const {
  if (!adjacent(u, v)) throw std::invalid_argument("edge does not exist");
  Instance g = *this;
  g.adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  g.adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  --g.m_;
  return g;
}

}  // namespace wst
