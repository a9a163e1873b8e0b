#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wst/instance.hpp"
#include "wst/recognition.hpp"

namespace wst {

struct ReductionOutput {
  Instance instance;
  std::vector<int> original_to_new;  // original vertex -> id in `instance`
  int r1 = -1, r2 = -1, r3 = -1, t = -1;
};

// Builds the hard instance from a vertex cover instance on a 3-partite
// graph: each part becomes a clique, a hub r_i is attached to part i and to
// a single terminal t, original vertices get weight 1 and the four new
// vertices weight |V(g)|. The result is 5P1-free, and its minimum transversal
// weight equals the minimum vertex cover size of g. Throws
// std::invalid_argument when the parts do not partition V(g) into independent
// sets.
ReductionOutput vc3_to_wsoct(const Instance& g,
                             const std::array<VertexSet, 3>& parts);

struct GeneratorOptions {
  Weight weight_max = 20;
  double terminal_density = 0.4;
  double edge_probability = 0;  // 0 = per-class default (0.3 baseline)
  int attempt_budget = 100000;
};

// Seeded random instance inside the given class: rejection-sampled
// Erdos-Renyi graphs validated with contains_induced, except P4free, which is
// built from a random cotree directly. Deterministic in (n, label, seed,
// options); throws std::runtime_error when the attempt budget runs out and
// std::invalid_argument for n > 40 or an Unsupported label.
Instance random_hfree(int n, const ClassLabel& label, std::uint64_t seed,
                      const GeneratorOptions& options = {});

// Random 3-partite instance plus its partition (unit weights, no terminals);
// handy input for vc3_to_wsoct.
std::pair<Instance, std::array<VertexSet, 3>> random_3partite(
    int n, std::uint64_t seed, double edge_probability = 0.5);

}  // namespace wst
