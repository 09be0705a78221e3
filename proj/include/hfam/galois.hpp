#pragma once

// Exact computation of m(F,G,t) and the full maximizer set M(F,G,t) for the
// cross-t-intersection relation between two uniform families, via
// enumeration of the closed pairs of the induced Galois connection
// (dual(A) = all t-transversals of A inside the target family). Includes a
// subset-enumeration oracle, structural classification of maximizers, and a
// largest-t-intersecting-subfamily (clique) search.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfam/family.hpp"

namespace hfam {

struct no_cross_pair_error : std::runtime_error {
  no_cross_pair_error()
      : std::runtime_error("no cross-t-intersecting pair exists") {}
};

struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

struct CrossContext {
  SetFamily f;  // r-uniform side
  SetFamily g;  // s-uniform side
  int r = 0;
  int s = 0;
  int t = 0;

  // Validates 1 <= t <= r <= s and uniformity of both sides.
  static CrossContext make(SetFamily f, SetFamily g, int r, int s, int t);
  static CrossContext from_levels(const HereditaryFamily& h, int r, int s,
                                  int t);
};

struct CrossPair {
  SetFamily a;
  SetFamily b;
};

enum class PairShape { star_pair, swapped_star_pair, unstructured };

struct MaximizerClass {
  PairShape shape = PairShape::unstructured;
  GroundedSet witness;          // I; meaningful unless unstructured
  GroundedSet swapped_witness;  // set when the swapped pattern also matched
  bool matched_both = false;    // pair fits both patterns (anomaly, surfaced)
  bool star_sum_is_m = false;   // |F(I)| + |{B : |B∩I|>=t}| == m, re-derived
};

struct SolveStats {
  std::uint64_t closed_pairs_visited = 0;
  std::int64_t elapsed_ms = 0;
};

struct ExtremalReport {
  CrossContext context;
  std::uint64_t m = 0;
  std::vector<CrossPair> maximizers;  // canonical order, all of M
  std::vector<MaximizerClass> classifications;  // filled by classify
  SolveStats stats;
};

// {X in target : |X ∩ A| >= t for all A in S}; dual of the empty family is
// the whole target.
SetFamily dual(const SetFamily& s, const SetFamily& target, int t);

// dual(dual(A)) back into ctx.f; extensive and idempotent. A must be a
// subfamily of ctx.f.
SetFamily closure(const SetFamily& a, const CrossContext& ctx);

struct SolveOptions {
  int workers = 1;
  bool measure_time = false;  // off by default: reports stay byte-stable
};

// Exact maximum of |A|+|B| over non-empty cross-t-intersecting pairs, with
// every maximizer (each closed: B = dual(A), A = dual(B)). Throws
// no_cross_pair_error when no pair exists.
ExtremalReport solve_m(const CrossContext& ctx, const SolveOptions& opts = {});

// Independent oracle: enumerates all non-empty A ⊆ F with B = dual(A).
// Throws cap_error("oracle cap") when |F| > cap.
ExtremalReport brute_force_m(const CrossContext& ctx, int cap = 20);

// Tags every maximizer against the star-pair / swapped-star-pair patterns
// over witnesses I in H with t <= |I| <= r. The context must be the (r,s)
// levels of h.
ExtremalReport classify_maximizers(ExtremalReport report,
                                   const HereditaryFamily& h);

struct StarPropertyResult {
  int size = 0;              // largest t-intersecting subfamily of F
  SetFamily witness;         // one subfamily attaining it
  bool star_attained = false;
  int best_star_size = 0;
  GroundedSet best_star_core;  // T with |F(T)| = best_star_size
};

// Branch-and-bound maximum clique on the t-intersection graph of F.
// Throws cap_error("clique cap") when |F| > cap.
StarPropertyResult max_t_intersecting(const SetFamily& f, int t, int cap = 25);

}  // namespace hfam
