#pragma once

// One executable checker per level-counting / transversal statement, plus
// conjecture probes. A checker either returns a CheckResult with exact
// cross-multiplied integers and a re-verifiable certificate, or throws
// hypothesis_error when the instance is outside the statement's hypotheses
// (never counted as a violation). holds=false on an assertive checker is a
// bug certificate, not an expected outcome.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hfam/exact.hpp"
#include "hfam/family.hpp"
#include "hfam/galois.hpp"

namespace hfam {

struct hypothesis_error : std::runtime_error {
  explicit hypothesis_error(const std::string& what)
      : std::runtime_error("hypothesis not met: " + what) {}
};

struct CheckResult {
  std::string lemma;
  std::uint64_t digest = 0;  // hash of the instance
  bool holds = false;
  i128 lhs = 0;
  i128 rhs = 0;
  bool equality = false;
  bool assertive = true;  // proved statement: holds=false means artifact bug
  nlohmann::json certificate;

  nlohmann::json to_json() const;
};

// |H^(s)| * C(s, s-r) >= C(mu-r, s-r) * |H^(r)|   for 0 <= r <= s <= mu - r
CheckResult check_sperner(const HereditaryFamily& h, int r, int s);

// mu({G\X : G in H, G∩Y = X}) >= mu(H) - |Y|   (X ⊆ Y, restriction non-empty)
CheckResult check_mu_trace(const HereditaryFamily& h, const GroundedSet& x,
                           const GroundedSet& y);

// mu({F\X : F in F(X)}) >= mu(F) - |X|   (F(X) non-empty; F arbitrary)
CheckResult check_mu_link(const SetFamily& f, const GroundedSet& x);

// |{H in H^(s) : H∩U = T}| * C(s-t, s+u-r-t) >= C(mu-r, s+u-r-t) * |H^(r)(U)|
CheckResult check_fiber_count(const HereditaryFamily& h, int r, int s, int t,
                              const GroundedSet& tset, const GroundedSet& uset);

// |A| <= C(|X|, t) * max_{T in C(X,t)} |A(T)|   (X a t-transversal of A)
CheckResult check_transversal_cover(const SetFamily& a, const GroundedSet& x,
                                    int t);

// A(T) = union over x in X\T of A(T ∪ {x})   (set equality, both inclusions)
CheckResult check_transversal_partition(const SetFamily& a,
                                        const GroundedSet& x,
                                        const GroundedSet& tset, int t);

// exists B, X in B, T in C(B,t), x in X\T with |A| <= s * C(s,t) * |A(T∪{x})|
CheckResult check_transversal_chain(const SetFamily& a, const SetFamily& b,
                                    int r, int s, int t);

// exists a t-set T ⊆ some B in B with
//   |A| * (mu(H) - r) < s * (r-t) * C(s,t) * |H^(r)(T)|
CheckResult check_transversal_star_bound(const HereditaryFamily& h,
                                         const SetFamily& a, const SetFamily& b,
                                         int r, int s, int t);

// (i)  2 * r * (s-t) * C(r,t) < n - s
// (ii) 2 * C(s,t) * C(s-t, s-r) <= C(n-r, s-r)   when r < s
CheckResult check_calc(int r, int s, int t, std::uint64_t n);

// |H^(r)(I)| + |{B in H^(s) : |B∩I| >= t}| <= |H^(s)|; equality only with
// t = 1 and mu(H) = r + s.
CheckResult check_sum_bound(const HereditaryFamily& h, int r, int s, int t,
                            const GroundedSet& iset);

// m(H^(r), H^(s), t) <= |H^(s)| via solve_m. Assertive only when
// mu(H) >= c(r,s,t); below that it is a recorded observation.
CheckResult probe_sum_conjecture(const HereditaryFamily& h, int r, int s,
                                 int t);

inline constexpr const char* kLemmaIds[] = {
    "sperner",
    "mu-trace",
    "mu-link",
    "fiber-count",
    "transversal-cover",
    "transversal-partition",
    "transversal-chain",
    "transversal-star-bound",
    "calc",
    "sum-bound",
};

using LineSink = std::function<void(const nlohmann::json&)>;

struct FuzzSummary {
  std::string lemma;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t equalities = 0;
  std::size_t hypothesis_misses = 0;  // generator retries; 0 expected
  std::vector<CheckResult> failed;
};

// Runs `count` seeded-random instances of one checker with hypotheses
// enforced by construction. Per-instance seeds derive from (seed, index), so
// the outcome is independent of the worker count.
FuzzSummary run_fuzz(const std::string& lemma, std::size_t count,
                     std::uint64_t seed, int workers = 1,
                     const LineSink& sink = {});

// Every non-empty antichain of subsets of [n] with all sizes >= min_base,
// emitted as a hereditary family. fn returns false to stop early. Returns
// the number of families emitted.
std::size_t enumerate_antichain_families(
    int n, int min_base, std::size_t max_instances,
    const std::function<bool(const HereditaryFamily&)>& fn);

struct EtaProbeSpec {
  int n = 6;
  bool exhaustive = true;
  int min_base = 0;  // clamped up to r+s-t+1
  std::uint64_t seed = 0;       // random mode
  std::size_t count = 0;        // random mode instance count
  int base_count = 3;           // random mode
  std::size_t max_instances = 1000000;
};

struct EtaCounterexample {
  HereditaryFamily family;
  std::uint64_t m = 0;
  std::uint64_t best_star_sum = 0;
};

struct EtaProbeReport {
  int r = 0, s = 0, t = 0;
  std::size_t instances = 0;
  std::size_t no_pair = 0;
  std::vector<EtaCounterexample> counterexamples;
};

// For each H in the population (mu >= r+s-t+1): solve m(H^(r),H^(s),t) and
// test whether some pair (H^(r)(I), {B : |B∩I| >= t}) attains it. Families
// where no I works are reported as counterexample candidates.
EtaProbeReport probe_eta(int r, int s, int t, const EtaProbeSpec& spec,
                         const LineSink& sink = {});

}  // namespace hfam
