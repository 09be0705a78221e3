#include "hfam/construct.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hfam {

Graph Graph::make(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("graph size must be in [0, 64]");
  Graph g;
  g.n = n;
  g.adjacency.assign(static_cast<std::size_t>(n), 0);
  return g;
}

void Graph::add_edge(int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("edge endpoint out of [1, n]");
  if (i == j) throw std::invalid_argument("self-loop");
  adjacency[static_cast<std::size_t>(i - 1)] |= std::uint64_t{1} << (j - 1);
  adjacency[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > n || i == j) return false;
  return (adjacency[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1u;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t row : adjacency) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::uint64_t SplitMix64::next() {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

GroundedSet random_subset(SplitMix64& rng, int n, int size) {
  if (size < 0 || size > n) throw std::invalid_argument("subset size out of range");
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  std::uint64_t bits = 0;
  for (int i = 0; i < size; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
    bits |= std::uint64_t{1} << (labels[static_cast<std::size_t>(i)] - 1);
  }
  return GroundedSet(n, bits);
}

HereditaryFamily power_set(int n) {
  full_mask(n);  // rejects n outside [0, 64]
  return HereditaryFamily::from_bases(
      SetFamily::canonical(n, {GroundedSet::full(n)}));
}

namespace {

// Bron-Kerbosch with pivoting over the non-adjacency relation: maximal
// cliques of the complement graph are exactly the maximal independent sets.
void maximal_independent_sets(const Graph& g, std::vector<GroundedSet>& out) {
  const int n = g.n;
  if (n == 0) {
    out.push_back(GroundedSet::empty(0));
    return;
  }
  const std::uint64_t all = full_mask(n);
  std::vector<std::uint64_t> non_adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    non_adj[static_cast<std::size_t>(v)] =
        all & ~g.adjacency[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);

  struct Rec {
    const std::vector<std::uint64_t>& link;
    std::vector<GroundedSet>& sink;
    int n;
    void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
      if (p == 0 && x == 0) {
        sink.emplace_back(n, r);
        return;
      }
      std::uint64_t px = p | x;
      int pivot = std::countr_zero(px);
      int best = -1;
      while (px) {
        const int u = std::countr_zero(px);
        const int deg = std::popcount(p & link[static_cast<std::size_t>(u)]);
        if (deg > best) {
          best = deg;
          pivot = u;
        }
        px &= px - 1;
      }
      std::uint64_t cand = p & ~link[static_cast<std::size_t>(pivot)];
      while (cand) {
        const int v = std::countr_zero(cand);
        const std::uint64_t bit = std::uint64_t{1} << v;
        run(r | bit, p & link[static_cast<std::size_t>(v)],
            x & link[static_cast<std::size_t>(v)]);
        p &= ~bit;
        x |= bit;
        cand &= cand - 1;
      }
    }
  } rec{non_adj, out, n};
  rec.run(0, all, 0);
}

}  // namespace

HereditaryFamily independence_complex(const Graph& g) {
  std::vector<GroundedSet> mis;
  maximal_independent_sets(g, mis);
  return HereditaryFamily::from_bases(SetFamily::canonical(g.n, std::move(mis)));
}

HereditaryFamily random_hereditary(const RandomSpec& spec) {
  if (spec.n < 0 || spec.n > 64) throw std::invalid_argument("n out of [0, 64]");
  if (spec.base_count < 1) throw std::invalid_argument("base_count must be >= 1");
  if (!(0 <= spec.min_base && spec.min_base <= spec.max_base &&
        spec.max_base <= spec.n))
    throw std::invalid_argument("require 0 <= min_base <= max_base <= n");
  if (spec.mu_floor > spec.min_base)
    throw std::invalid_argument("mu_floor must be <= min_base");

  SplitMix64 rng(spec.seed);
  constexpr int kBudget = 1000;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    std::vector<GroundedSet> draws;
    draws.reserve(static_cast<std::size_t>(spec.base_count));
    for (int i = 0; i < spec.base_count; ++i) {
      const int size =
          spec.min_base +
          static_cast<int>(rng.below(
              static_cast<std::uint64_t>(spec.max_base - spec.min_base + 1)));
      draws.push_back(random_subset(rng, spec.n, size));
    }
    HereditaryFamily h =
        downward_closure(SetFamily::canonical(spec.n, std::move(draws)));
    if (h.mu() >= spec.mu_floor) return h;
  }
  throw std::runtime_error("generation budget exhausted");
}

}  // namespace hfam
