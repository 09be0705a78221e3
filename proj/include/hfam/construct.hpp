#pragma once

// Builders for hereditary families: power sets, graph independence
// complexes, and seeded random generation.

#include <cstdint>
#include <vector>

#include "hfam/family.hpp"

namespace hfam {

struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adjacency;  // row v (0-based): neighbour mask

  static Graph make(int n);
  void add_edge(int i, int j);  // 1-based labels; rejects self-loops
  bool has_edge(int i, int j) const;
  std::size_t edge_count() const;
  // Unordered pairs {i, j}, i < j, 1-based, sorted.
  std::vector<std::pair<int, int>> edges() const;
};

// splitmix64; fully specified so seeded runs are reproducible everywhere.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // unbiased, bound >= 1
};

GroundedSet random_subset(SplitMix64& rng, int n, int size);

HereditaryFamily power_set(int n);  // 0 <= n <= 64

// Bases are the maximal independent sets of g.
HereditaryFamily independence_complex(const Graph& g);

struct RandomSpec {
  int n = 0;
  int base_count = 1;
  int min_base = 0;
  int max_base = 0;
  int mu_floor = 0;  // must be <= min_base
  std::uint64_t seed = 0;
};

// Deterministic in spec (including seed). Draws base_count sets with sizes
// uniform in [min_base, max_base], antichain-reduces, redraws until
// mu >= mu_floor (budget 1000, then throws std::runtime_error).
HereditaryFamily random_hereditary(const RandomSpec& spec);

}  // namespace hfam
