#include "hfam/lemmas.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "hfam/construct.hpp"
#include "hfam/io.hpp"

namespace hfam {

namespace {

using nlohmann::json;

i128 from_u128(u128 v) {
  if (v > (u128{1} << 127) - 1)
    throw std::overflow_error("count product too large for signed compare");
  return static_cast<i128>(v);
}

std::uint64_t digest_of(const std::string& lemma, const json& instance) {
  return fnv1a64(lemma + "\x1f" + instance.dump());
}

CheckResult base_result(const std::string& lemma, const json& instance) {
  CheckResult r;
  r.lemma = lemma;
  r.digest = digest_of(lemma, instance);
  return r;
}

void require(bool cond, const char* what) {
  if (!cond) throw hypothesis_error(what);
}

bool is_t_transversal(const GroundedSet& x, const SetFamily& a, int t) {
  for (const auto& m : a)
    if (intersection_size(x, m) < t) return false;
  return true;
}

bool cross_t_intersecting(const SetFamily& a, const SetFamily& b, int t) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (intersection_size(x, y) < t) return false;
  return true;
}

// |common core| >= t marks a trivial t-intersecting family.
int common_core_size(const SetFamily& f) {
  if (f.empty()) return 0;
  GroundedSet core = f.at(0);
  for (const auto& m : f) core = core.intersect(m);
  return core.size();
}

}  // namespace

json CheckResult::to_json() const {
  return json{{"lemma", lemma},
              {"digest", hex64(digest)},
              {"holds", holds},
              {"lhs", to_decimal(lhs)},
              {"rhs", to_decimal(rhs)},
              {"equality", equality},
              {"assertive", assertive},
              {"certificate", certificate}};
}

CheckResult check_sperner(const HereditaryFamily& h, int r, int s) {
  const int m = h.mu();
  require(0 <= r && r <= s && s <= m - r, "need 0 <= r <= s <= mu - r");
  const json instance{{"family", family_to_json(h)}, {"r", r}, {"s", s}};
  CheckResult out = base_result("sperner", instance);
  const std::uint64_t lr = level(h, r).size();
  const std::uint64_t ls = level(h, s).size();
  out.lhs = from_u128(checked_mul(u128(ls), binomial(s, s - r)));
  out.rhs = from_u128(checked_mul(binomial(m - r, s - r), u128(lr)));
  out.holds = out.lhs >= out.rhs;
  out.equality = out.lhs == out.rhs;
  out.certificate = {{"mu", m}, {"level_r_size", lr}, {"level_s_size", ls}};
  return out;
}

CheckResult check_mu_trace(const HereditaryFamily& h, const GroundedSet& x,
                           const GroundedSet& y) {
  require(x.ground() == h.ground() && y.ground() == h.ground(),
          "ground size mismatch");
  require(x.subset_of(y), "X not contained in Y");
  const TraceResult tr = restricted_trace(h, x, y);
  require(!tr.empty, "restriction is empty");
  const json instance{{"family", family_to_json(h)},
                      {"X", set_to_json(x)},
                      {"Y", set_to_json(y)}};
  CheckResult out = base_result("mu-trace", instance);
  out.lhs = tr.mu;
  out.rhs = h.mu() - y.size();
  out.holds = out.lhs >= out.rhs;
  out.equality = out.lhs == out.rhs;
  out.certificate = {{"trace_mu", tr.mu},
                     {"trace_size", tr.members.size()},
                     {"mu", h.mu()}};
  return out;
}

CheckResult check_mu_link(const SetFamily& f, const GroundedSet& x) {
  require(x.ground() == f.ground(), "ground size mismatch");
  const SetFamily fx = star(f, x);
  require(!fx.empty(), "F(X) is empty");
  const json instance{{"family", set_family_to_json(f)}, {"X", set_to_json(x)}};
  CheckResult out = base_result("mu-link", instance);
  const SetFamily lk = link(f, x);
  out.lhs = family_mu(lk);
  out.rhs = family_mu(f) - x.size();
  out.holds = out.lhs >= out.rhs;
  out.equality = out.lhs == out.rhs;
  out.certificate = {{"link_mu", static_cast<int>(out.lhs)},
                     {"family_mu", family_mu(f)},
                     {"star_size", fx.size()}};
  return out;
}

CheckResult check_fiber_count(const HereditaryFamily& h, int r, int s, int t,
                              const GroundedSet& tset, const GroundedSet& uset) {
  require(tset.ground() == h.ground() && uset.ground() == h.ground(),
          "ground size mismatch");
  const int u = uset.size();
  require(0 <= t && t <= u && u <= r, "need 0 <= t <= |U| <= r");
  require(s >= r + t - u, "need s >= r + t - |U|");
  require(h.mu() >= r + s - t, "need mu >= r + s - t");
  require(tset.subset_of(uset) && tset.size() == t, "T must be a t-subset of U");
  const SetFamily star_r = star(level(h, r), uset);
  require(!star_r.empty(), "H^(r)(U) is empty");

  const json instance{{"family", family_to_json(h)}, {"r", r}, {"s", s},
                      {"t", t},  {"T", set_to_json(tset)}, {"U", set_to_json(uset)}};
  CheckResult out = base_result("fiber-count", instance);
  std::uint64_t fiber = 0;
  for (const auto& m : level(h, s))
    if (m.intersect(uset) == tset) ++fiber;
  const int k = s + u - r - t;
  out.lhs = from_u128(checked_mul(u128(fiber), binomial(s - t, k)));
  out.rhs = from_u128(checked_mul(binomial(h.mu() - r, k), u128(star_r.size())));
  out.holds = out.lhs >= out.rhs;
  out.equality = out.lhs == out.rhs;
  out.certificate = {{"fiber_size", fiber},
                     {"level_r_star_size", star_r.size()},
                     {"k", k},
                     {"mu", h.mu()}};
  return out;
}

CheckResult check_transversal_cover(const SetFamily& a, const GroundedSet& x,
                                    int t) {
  require(x.ground() == a.ground(), "ground size mismatch");
  require(t >= 0 && x.size() >= t, "need |X| >= t >= 0");
  require(is_t_transversal(x, a, t), "X is not a t-transversal of A");
  const json instance{{"family", set_family_to_json(a)},
                      {"X", set_to_json(x)},
                      {"t", t}};
  CheckResult out = base_result("transversal-cover", instance);
  std::uint64_t best = 0;
  GroundedSet best_t = GroundedSet::empty(a.ground());
  for_each_subset_of_size(x, t, [&](const GroundedSet& tt) {
    const std::uint64_t sz = star(a, tt).size();
    if (sz > best) {
      best = sz;
      best_t = tt;
    }
  });
  out.lhs = static_cast<i128>(a.size());
  out.rhs = from_u128(checked_mul(binomial(x.size(), t), u128(best)));
  out.holds = out.lhs <= out.rhs;
  out.equality = out.lhs == out.rhs;
  out.certificate = {{"T", set_to_json(best_t)}, {"star_size", best}};
  return out;
}

CheckResult check_transversal_partition(const SetFamily& a, const GroundedSet& x,
                                        const GroundedSet& tset, int t) {
  require(x.ground() == a.ground() && tset.ground() == a.ground(),
          "ground size mismatch");
  require(t >= 0 && tset.size() == t, "|T| must equal t");
  require(is_t_transversal(x, a, t), "X is not a t-transversal of A");
  require(!tset.subset_of(x), "T must not be contained in X");
  const json instance{{"family", set_family_to_json(a)},
                      {"X", set_to_json(x)},
                      {"T", set_to_json(tset)},
                      {"t", t}};
  CheckResult out = base_result("transversal-partition", instance);
  const SetFamily left = star(a, tset);
  std::vector<GroundedSet> collected;
  for (int e : x.minus(tset).elements())
    for (const auto& m : star(a, tset.with(e))) collected.push_back(m);
  const SetFamily right = SetFamily::canonical(a.ground(), std::move(collected));
  out.lhs = static_cast<i128>(left.size());
  out.rhs = static_cast<i128>(right.size());
  out.holds = left == right;  // set equality, not just counts
  out.equality = out.holds;
  out.certificate = {{"star_size", left.size()}, {"union_size", right.size()}};
  return out;
}

CheckResult check_transversal_chain(const SetFamily& a, const SetFamily& b,
                                    int r, int s, int t) {
  require(!a.empty() && !b.empty(), "both families must be non-empty");
  require(1 <= t && t <= r && r <= s, "need 1 <= t <= r <= s");
  require(a.uniform(r), "A is not r-uniform");
  require(b.uniform(s), "B is not s-uniform");
  require(cross_t_intersecting(a, b, t), "A and B are not cross-t-intersecting");
  require(common_core_size(b) < t, "B is a trivial t-intersecting family");
  const json instance{{"A", set_family_to_json(a)}, {"B", set_family_to_json(b)},
                      {"r", r}, {"s", s}, {"t", t}};
  CheckResult out = base_result("transversal-chain", instance);
  const u128 factor = checked_mul(u128(s), binomial(s, t));
  out.lhs = static_cast<i128>(a.size());
  out.rhs = 0;
  out.holds = false;
  for (const auto& bset : b) {
    for_each_subset_of_size(bset, t, [&](const GroundedSet& tt) {
      if (out.holds) return;
      for (const auto& xset : b) {
        if (tt.subset_of(xset)) continue;
        for (int e : xset.minus(tt).elements()) {
          const std::uint64_t sz = star(a, tt.with(e)).size();
          const i128 rhs = from_u128(checked_mul(factor, u128(sz)));
          if (out.lhs <= rhs) {
            out.holds = true;
            out.rhs = rhs;
            out.equality = out.lhs == rhs;
            out.certificate = {{"B", set_to_json(bset)},
                               {"T", set_to_json(tt)},
                               {"X", set_to_json(xset)},
                               {"x", e},
                               {"star_size", sz}};
            return;
          }
        }
      }
    });
    if (out.holds) break;
  }
  if (!out.holds) out.certificate = {{"witness_found", false}};
  return out;
}

CheckResult check_transversal_star_bound(const HereditaryFamily& h,
                                         const SetFamily& a, const SetFamily& b,
                                         int r, int s, int t) {
  require(a.ground() == h.ground() && b.ground() == h.ground(),
          "ground size mismatch");
  require(1 <= t && t <= r, "need 1 <= t <= r");
  require(h.mu() >= 2 * r - t, "need mu >= 2r - t");
  require(!a.empty(), "A must be non-empty");
  const SetFamily level_r = level(h, r);
  for (const auto& m : a)
    require(level_r.contains(m), "A must sit inside H^(r)");
  require(!b.empty() && b.uniform(s), "B must be non-empty and s-uniform");
  require(cross_t_intersecting(a, b, t), "A and B are not cross-t-intersecting");
  require(common_core_size(b) < t, "B is a trivial t-intersecting family");

  const json instance{{"family", family_to_json(h)},
                      {"A", set_family_to_json(a)},
                      {"B", set_family_to_json(b)},
                      {"r", r}, {"s", s}, {"t", t}};
  CheckResult out = base_result("transversal-star-bound", instance);
  const u128 factor = checked_mul(checked_mul(u128(s), u128(r - t)), binomial(s, t));
  out.lhs = from_u128(checked_mul(u128(a.size()), u128(h.mu() - r)));
  out.rhs = 0;
  out.holds = false;
  i128 best_rhs = 0;
  GroundedSet best_t = GroundedSet::empty(h.ground());
  GroundedSet best_b = GroundedSet::empty(h.ground());
  for (const auto& bset : b) {
    for_each_subset_of_size(bset, t, [&](const GroundedSet& tt) {
      const i128 rhs =
          from_u128(checked_mul(factor, u128(star(level_r, tt).size())));
      if (rhs > best_rhs) {
        best_rhs = rhs;
        best_t = tt;
        best_b = bset;
      }
    });
  }
  out.rhs = best_rhs;
  out.holds = out.lhs < best_rhs;  // strict
  out.equality = out.lhs == best_rhs;
  out.certificate = {{"T", set_to_json(best_t)}, {"B", set_to_json(best_b)}};
  return out;
}

CheckResult check_calc(int r, int s, int t, std::uint64_t n) {
  require(1 <= t && t <= r && r <= s, "need 1 <= t <= r <= s");
  require(!(r == t && s == t), "(r, s) = (t, t) is excluded");
  const Threshold c = c_threshold(r, s, t);
  require(u128(n) >= c.value, "need n >= c(r,s,t)");
  const json instance{{"r", r}, {"s", s}, {"t", t}, {"n", n}};
  CheckResult out = base_result("calc", instance);
  const i128 lhs_i =
      from_u128(checked_mul(checked_mul(u128(2) * u128(r), u128(s - t)),
                            binomial(r, t)));
  const i128 rhs_i = static_cast<i128>(n - s);
  const bool holds_i = lhs_i < rhs_i;
  out.lhs = lhs_i;
  out.rhs = rhs_i;
  out.certificate = {{"part_i", {{"lhs", to_decimal(lhs_i)},
                                 {"rhs", to_decimal(rhs_i)},
                                 {"strict", true}}}};
  bool holds_ii = true;
  if (r < s) {
    const i128 lhs_ii = from_u128(
        checked_mul(checked_mul(u128(2), binomial(s, t)), binomial(s - t, s - r)));
    const i128 rhs_ii = from_u128(binomial(n - r, s - r));
    holds_ii = lhs_ii <= rhs_ii;
    out.certificate["part_ii"] = {{"lhs", to_decimal(lhs_ii)},
                                  {"rhs", to_decimal(rhs_ii)},
                                  {"strict", false}};
  }
  out.holds = holds_i && holds_ii;
  out.equality = lhs_i == rhs_i;
  return out;
}

CheckResult check_sum_bound(const HereditaryFamily& h, int r, int s, int t,
                            const GroundedSet& iset) {
  require(iset.ground() == h.ground(), "ground size mismatch");
  require(1 <= t && t <= r && r <= s, "need 1 <= t <= r <= s");
  require(h.mu() >= r + s - t + 1, "need mu >= r + s - t + 1");
  require(h.member(iset), "I must belong to the family");
  require(t <= iset.size() && iset.size() <= r, "need t <= |I| <= r");
  const json instance{{"family", family_to_json(h)}, {"r", r}, {"s", s},
                      {"t", t},  {"I", set_to_json(iset)}};
  CheckResult out = base_result("sum-bound", instance);
  const SetFamily a = star(level(h, r), iset);
  const SetFamily bb = meets_at_least(level(h, s), iset, t);
  const std::uint64_t hs = level(h, s).size();
  out.lhs = static_cast<i128>(a.size() + bb.size());
  out.rhs = static_cast<i128>(hs);
  out.equality = out.lhs == out.rhs;
  const bool conditions_ok = t == 1 && h.mu() == r + s;
  out.holds = out.lhs <= out.rhs && (!out.equality || conditions_ok);
  out.certificate = {{"a_size", a.size()},
                     {"b_size", bb.size()},
                     {"level_s_size", hs},
                     {"equality_conditions",
                      {{"t_is_1", t == 1}, {"mu_is_r_plus_s", h.mu() == r + s}}}};
  return out;
}

CheckResult probe_sum_conjecture(const HereditaryFamily& h, int r, int s, int t) {
  require(1 <= t && t <= r && r <= s, "need 1 <= t <= r <= s");
  require(h.mu() >= r + s - t + 1, "need mu >= r + s - t + 1");
  const json instance{{"family", family_to_json(h)}, {"r", r}, {"s", s}, {"t", t}};
  CheckResult out = base_result("sum-conjecture", instance);
  const Threshold c = c_threshold(r, s, t);
  out.assertive = u128(h.mu()) >= c.value;
  out.rhs = static_cast<i128>(level(h, s).size());
  try {
    const ExtremalReport rep = solve_m(CrossContext::from_levels(h, r, s, t));
    out.lhs = static_cast<i128>(rep.m);
    out.holds = out.lhs <= out.rhs;
    out.equality = out.lhs == out.rhs;
    out.certificate = {{"m", rep.m},
                       {"level_s_size", level(h, s).size()},
                       {"assertive_above_threshold", out.assertive}};
  } catch (const no_cross_pair_error&) {
    out.lhs = 0;
    out.holds = true;
    out.equality = false;
    out.certificate = {{"no_pair", true}};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Seeded fuzz instance generators, one per checker. Hypotheses hold by
// construction; a failed draw is retried and counted.

namespace {

GroundedSet random_subset_of(SplitMix64& rng, const GroundedSet& base, int size) {
  std::vector<int> elems = base.elements();
  const int m = static_cast<int>(elems.size());
  if (size < 0 || size > m) throw std::invalid_argument("subset size out of range");
  std::uint64_t bits = 0;
  for (int i = 0; i < size; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
    std::swap(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
    bits |= std::uint64_t{1} << (elems[static_cast<std::size_t>(i)] - 1);
  }
  return GroundedSet(base.ground(), bits);
}

HereditaryFamily rand_family(SplitMix64& rng, int n_lo, int n_hi, int bases_hi,
                             int size_lo, int size_spread) {
  const int n = n_lo + static_cast<int>(rng.below(
                            static_cast<std::uint64_t>(n_hi - n_lo + 1)));
  const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(bases_hi)));
  const int lo = std::min(size_lo, n);
  const int hi = std::min(n, lo + static_cast<int>(rng.below(
                                      static_cast<std::uint64_t>(size_spread + 1))));
  RandomSpec spec;
  spec.n = n;
  spec.base_count = k;
  spec.min_base = lo;
  spec.max_base = hi;
  spec.mu_floor = lo;
  spec.seed = rng.next();
  return random_hereditary(spec);
}

SetFamily random_subfamily(SplitMix64& rng, const SetFamily& pool) {
  std::vector<GroundedSet> keep;
  for (const auto& m : pool)
    if (rng.below(2) == 0) keep.push_back(m);
  if (keep.empty() && !pool.empty())
    keep.push_back(pool.at(static_cast<std::size_t>(rng.below(pool.size()))));
  return SetFamily::canonical(pool.ground(), std::move(keep));
}

SetFamily random_members(SplitMix64& rng, const SetFamily& pool, int count) {
  std::vector<GroundedSet> keep;
  for (int i = 0; i < count; ++i)
    keep.push_back(pool.at(static_cast<std::size_t>(rng.below(pool.size()))));
  return SetFamily::canonical(pool.ground(), std::move(keep));
}

CheckResult fuzz_sperner(SplitMix64& rng) {
  const HereditaryFamily h = rand_family(rng, 6, 12, 4, 3 + static_cast<int>(rng.below(3)), 3);
  const int m = h.mu();
  const int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(m / 2 + 1)));
  const int s = r + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 2 * r + 1)));
  return check_sperner(h, r, s);
}

CheckResult fuzz_mu_trace(SplitMix64& rng) {
  const HereditaryFamily h = rand_family(rng, 5, 10, 3, 2 + static_cast<int>(rng.below(3)), 3);
  const auto& bs = h.bases();
  const GroundedSet base = bs.at(static_cast<std::size_t>(rng.below(bs.size())));
  const int xs = static_cast<int>(rng.below(static_cast<std::uint64_t>(
      std::min(3, base.size()) + 1)));
  const GroundedSet x = random_subset_of(rng, base, xs);
  GroundedSet y = x;
  const GroundedSet rest = GroundedSet::full(h.ground()).minus(x);
  const int extra = static_cast<int>(rng.below(3));
  for (int e : random_subset_of(rng, rest, std::min(extra, rest.size())).elements())
    y = y.with(e);
  return check_mu_trace(h, x, y);
}

CheckResult fuzz_mu_link(SplitMix64& rng) {
  const int n = 5 + static_cast<int>(rng.below(6));
  const int k = 2 + static_cast<int>(rng.below(7));
  std::vector<GroundedSet> members;
  for (int i = 0; i < k; ++i) {
    const int sz = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    members.push_back(random_subset(rng, n, sz));
  }
  const SetFamily f = SetFamily::canonical(n, std::move(members));
  const GroundedSet anchor = f.at(static_cast<std::size_t>(rng.below(f.size())));
  const int xs = static_cast<int>(rng.below(static_cast<std::uint64_t>(
      std::min(2, anchor.size()) + 1)));
  return check_mu_link(f, random_subset_of(rng, anchor, xs));
}

CheckResult fuzz_fiber_count(SplitMix64& rng) {
  const int t = static_cast<int>(rng.below(3));
  const int u = t + static_cast<int>(rng.below(3));
  const int r = u + static_cast<int>(rng.below(3));
  const int s = std::max(r + t - u, 0) + static_cast<int>(rng.below(3));
  const int mu_need = std::max(r + s - t, 1);
  const int size_lo = std::max(mu_need, r);
  const HereditaryFamily h =
      rand_family(rng, std::min(size_lo + 2, 13), std::min(size_lo + 5, 13), 3,
                  size_lo, 2);
  const auto& bs = h.bases();
  const GroundedSet base = bs.at(static_cast<std::size_t>(rng.below(bs.size())));
  const GroundedSet uset = random_subset_of(rng, base, u);
  const GroundedSet tset = random_subset_of(rng, uset, t);
  return check_fiber_count(h, r, s, t, tset, uset);
}

// Shared setup for the cover/partition checks: a uniform family together
// with a transversal X, built as {r-sets meeting X in >= t elements}.
struct TransversalSetup {
  SetFamily a;
  GroundedSet x;
  int t;
};

TransversalSetup make_transversal_instance(SplitMix64& rng) {
  const int t = 1 + static_cast<int>(rng.below(2));
  const int r = t + static_cast<int>(rng.below(3));
  const int n = std::max(6, t + 4) + static_cast<int>(rng.below(4));
  const GroundedSet x = random_subset(rng, n, t + static_cast<int>(rng.below(3)));
  const SetFamily pool = meets_at_least(level(power_set(n), r), x, t);
  return TransversalSetup{random_subfamily(rng, pool), x, t};
}

CheckResult fuzz_transversal_cover(SplitMix64& rng) {
  const TransversalSetup setup = make_transversal_instance(rng);
  return check_transversal_cover(setup.a, setup.x, setup.t);
}

CheckResult fuzz_transversal_partition(SplitMix64& rng) {
  const TransversalSetup setup = make_transversal_instance(rng);
  const int n = setup.a.ground();
  for (int tries = 0; tries < 100; ++tries) {
    const GroundedSet tset = random_subset(rng, n, setup.t);
    if (!tset.subset_of(setup.x))
      return check_transversal_partition(setup.a, setup.x, tset, setup.t);
  }
  throw hypothesis_error("could not draw T outside X");
}

CheckResult fuzz_transversal_chain(SplitMix64& rng) {
  // r = t makes every cross-t partner of a non-empty t-uniform family
  // trivial, so the hypotheses would be unsatisfiable; keep r > t.
  const int t = 1 + static_cast<int>(rng.below(2));
  const int r = t + 1 + static_cast<int>(rng.below(2));
  const int s = r + static_cast<int>(rng.below(3));
  const int n = std::min(10, s + 2 + static_cast<int>(rng.below(3)));
  const HereditaryFamily cube = power_set(n);
  const SetFamily f = level(cube, r);
  const SetFamily g = level(cube, s);
  for (int tries = 0; tries < 100; ++tries) {
    const SetFamily a = random_members(rng, f, 1 + static_cast<int>(rng.below(3)));
    const SetFamily b = dual(a, g, t);
    if (b.empty() || common_core_size(b) >= t) continue;
    return check_transversal_chain(a, b, r, s, t);
  }
  throw hypothesis_error("could not construct a non-trivial partner family");
}

CheckResult fuzz_transversal_star_bound(SplitMix64& rng) {
  const int t = 1 + static_cast<int>(rng.below(2));
  const int r = t + 1 + static_cast<int>(rng.below(2));
  const int s = r + static_cast<int>(rng.below(3));
  const int size_lo = std::max(2 * r - t, r);
  const HereditaryFamily h =
      rand_family(rng, std::min(size_lo + 2, 12), std::min(size_lo + 5, 12), 3,
                  size_lo, 2);
  const SetFamily level_r = level(h, r);
  const SetFamily target = level(power_set(h.ground()), s);
  for (int tries = 0; tries < 100; ++tries) {
    const SetFamily a =
        random_members(rng, level_r, 1 + static_cast<int>(rng.below(3)));
    const SetFamily pool = dual(a, target, t);
    if (pool.empty()) continue;
    const SetFamily b = random_subfamily(rng, pool);
    if (b.empty() || common_core_size(b) >= t) continue;
    return check_transversal_star_bound(h, a, b, r, s, t);
  }
  throw hypothesis_error("could not construct a non-trivial partner family");
}

CheckResult fuzz_calc(SplitMix64& rng) {
  for (int tries = 0; tries < 100; ++tries) {
    const int t = 1 + static_cast<int>(rng.below(3));
    const int r = t + static_cast<int>(rng.below(3));
    const int s = r + static_cast<int>(rng.below(3));
    if (r == t && s == t) continue;
    const Threshold c = c_threshold(r, s, t);
    const std::uint64_t n =
        static_cast<std::uint64_t>(c.value) + rng.below(10);
    return check_calc(r, s, t, n);
  }
  throw hypothesis_error("could not draw parameters");
}

CheckResult fuzz_sum_bound(SplitMix64& rng) {
  if (rng.below(8) == 0) {
    // Boundary stratum: power set on r+s points with t = 1 and a singleton
    // witness, the only shape where equality can occur.
    const int r = 1 + static_cast<int>(rng.below(3));
    const int s = r + static_cast<int>(rng.below(3));
    const HereditaryFamily h = power_set(r + s);
    const GroundedSet iset =
        GroundedSet::of(r + s, {1 + static_cast<int>(rng.below(
                                        static_cast<std::uint64_t>(r + s)))});
    return check_sum_bound(h, r, s, 1, iset);
  }
  const int t = 1 + static_cast<int>(rng.below(2));
  const int r = t + static_cast<int>(rng.below(2));
  const int s = r + static_cast<int>(rng.below(3));
  const int floor = r + s - t + 1;
  const HereditaryFamily h =
      rand_family(rng, std::min(floor + 1, 13), std::min(floor + 4, 13), 3,
                  floor, 2);
  const auto& bs = h.bases();
  const GroundedSet base = bs.at(static_cast<std::size_t>(rng.below(bs.size())));
  const int u = t + static_cast<int>(rng.below(static_cast<std::uint64_t>(r - t + 1)));
  return check_sum_bound(h, r, s, t, random_subset_of(rng, base, u));
}

CheckResult fuzz_dispatch(const std::string& lemma, SplitMix64& rng) {
  if (lemma == "sperner") return fuzz_sperner(rng);
  if (lemma == "mu-trace") return fuzz_mu_trace(rng);
  if (lemma == "mu-link") return fuzz_mu_link(rng);
  if (lemma == "fiber-count") return fuzz_fiber_count(rng);
  if (lemma == "transversal-cover") return fuzz_transversal_cover(rng);
  if (lemma == "transversal-partition") return fuzz_transversal_partition(rng);
  if (lemma == "transversal-chain") return fuzz_transversal_chain(rng);
  if (lemma == "transversal-star-bound") return fuzz_transversal_star_bound(rng);
  if (lemma == "calc") return fuzz_calc(rng);
  if (lemma == "sum-bound") return fuzz_sum_bound(rng);
  throw std::invalid_argument("unknown lemma id: " + lemma);
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ (index * 0x9E3779B97F4A7C15ull + 1)).next();
}

}  // namespace

FuzzSummary run_fuzz(const std::string& lemma, std::size_t count,
                     std::uint64_t seed, int workers, const LineSink& sink) {
  FuzzSummary summary;
  summary.lemma = lemma;
  std::vector<CheckResult> results(count);
  std::vector<std::uint32_t> misses(count, 0);

  auto one = [&](std::size_t i) {
    SplitMix64 rng(instance_seed(seed, i));
    for (int attempt = 0;; ++attempt) {
      try {
        results[i] = fuzz_dispatch(lemma, rng);
        return;
      } catch (const hypothesis_error&) {
        if (attempt >= 200) throw;
        ++misses[i];
      }
    }
  };

  const int w = std::max(1, workers);
  if (w == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) one(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int k = 0; k < w; ++k)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= count) return;
          try {
            one(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (std::size_t i = 0; i < count; ++i) {
    const CheckResult& r = results[i];
    ++summary.instances;
    summary.hypothesis_misses += misses[i];
    if (r.equality) ++summary.equalities;
    if (!r.holds) {
      ++summary.failures;
      summary.failed.push_back(r);
    }
    if (sink) {
      json line = r.to_json();
      line["index"] = i;
      line["seed"] = instance_seed(seed, i);
      sink(line);
    }
  }
  return summary;
}

std::size_t enumerate_antichain_families(
    int n, int min_base, std::size_t max_instances,
    const std::function<bool(const HereditaryFamily&)>& fn) {
  full_mask(n);  // validates n
  std::vector<GroundedSet> candidates;
  const GroundedSet whole = GroundedSet::full(n);
  for (int k = std::max(0, min_base); k <= n; ++k)
    for_each_subset_of_size(whole, k,
                            [&](const GroundedSet& s) { candidates.push_back(s); });
  std::sort(candidates.begin(), candidates.end(), canonical_less);

  std::size_t emitted = 0;
  bool stop = false;
  std::vector<GroundedSet> chosen;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (stop) return;
    for (std::size_t i = start; i < candidates.size() && !stop; ++i) {
      bool comparable = false;
      for (const auto& c : chosen)
        if (candidates[i].subset_of(c) || c.subset_of(candidates[i])) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      chosen.push_back(candidates[i]);
      const HereditaryFamily h =
          HereditaryFamily::from_bases(SetFamily::canonical(n, chosen));
      ++emitted;
      if (!fn(h) || emitted >= max_instances)
        stop = true;
      else
        self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return emitted;
}

EtaProbeReport probe_eta(int r, int s, int t, const EtaProbeSpec& spec,
                         const LineSink& sink) {
  if (!(1 <= t && t <= r && r <= s))
    throw std::invalid_argument("require 1 <= t <= r <= s");
  EtaProbeReport report;
  report.r = r;
  report.s = s;
  report.t = t;
  const int floor = std::max(spec.min_base, r + s - t + 1);

  auto handle = [&](const HereditaryFamily& h) -> bool {
    ++report.instances;
    json line{{"family", family_to_json(h)}};
    try {
      const ExtremalReport rep = solve_m(CrossContext::from_levels(h, r, s, t));
      const SetFamily f = level(h, r);
      const SetFamily g = level(h, s);
      std::uint64_t best = 0;
      GroundedSet best_i = GroundedSet::empty(h.ground());
      for (int u = t; u <= r; ++u) {
        for (const auto& iset : level(h, u)) {
          const SetFamily a = star(f, iset);
          const SetFamily b = meets_at_least(g, iset, t);
          if (a.empty() || b.empty()) continue;
          const std::uint64_t sum = a.size() + b.size();
          if (sum > best) {
            best = sum;
            best_i = iset;
          }
        }
      }
      const bool attained = best == rep.m;
      line["m"] = rep.m;
      line["best_star_sum"] = best;
      line["star_attained"] = attained;
      line["best_I"] = set_to_json(best_i);
      if (!attained)
        report.counterexamples.push_back(EtaCounterexample{h, rep.m, best});
    } catch (const no_cross_pair_error&) {
      ++report.no_pair;
      line["no_pair"] = true;
    }
    if (sink) sink(line);
    return true;
  };

  if (floor > spec.n) return report;  // empty population, empty report
  if (spec.exhaustive) {
    enumerate_antichain_families(spec.n, floor, spec.max_instances, handle);
  } else {
    for (std::size_t i = 0; i < spec.count; ++i) {
      RandomSpec rs;
      rs.n = spec.n;
      rs.base_count = spec.base_count;
      rs.min_base = floor;
      rs.max_base = spec.n;
      rs.mu_floor = floor;
      rs.seed = instance_seed(spec.seed, i);
      handle(random_hereditary(rs));
      if (report.instances >= spec.max_instances) break;
    }
  }
  return report;
}

}  // namespace hfam
