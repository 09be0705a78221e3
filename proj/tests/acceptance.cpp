// Acceptance suite: one line per criterion, [PASS]/[FAIL], exit code equals
// the number of failed criteria. Run through ctest or directly.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hfam/construct.hpp"
#include "hfam/exact.hpp"
#include "hfam/family.hpp"
#include "hfam/galois.hpp"
#include "hfam/io.hpp"
#include "hfam/lemmas.hpp"

using namespace hfam;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& info) {
    if (detail.empty()) detail = info;
  }
};

bool same_maximizers(const ExtremalReport& a, const ExtremalReport& b) {
  if (a.maximizers.size() != b.maximizers.size()) return false;
  for (std::size_t i = 0; i < a.maximizers.size(); ++i)
    if (!(a.maximizers[i].a == b.maximizers[i].a &&
          a.maximizers[i].b == b.maximizers[i].b))
      return false;
  return true;
}

// 1. solver vs oracle on >= 200 seeded-random level contexts
Outcome criterion_oracle_equivalence() {
  Outcome out;
  SplitMix64 rng(10001);
  int compared = 0, mismatches = 0, agreements_on_empty = 0;
  int guard = 0;
  while (compared < 200 && ++guard < 5000) {
    RandomSpec spec;
    spec.n = 5 + static_cast<int>(rng.below(5));
    spec.base_count = 1 + static_cast<int>(rng.below(3));
    spec.min_base = 3;
    spec.max_base = std::min(spec.n, 6);
    spec.mu_floor = 3;
    spec.seed = rng.next();
    HereditaryFamily h = random_hereditary(spec);
    const int t = 1 + static_cast<int>(rng.below(2));
    const int r = t + static_cast<int>(rng.below(2));
    const int s = r + static_cast<int>(rng.below(2));
    CrossContext ctx;
    try {
      ctx = CrossContext::from_levels(h, r, s, t);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (ctx.f.size() > 14 || ctx.g.size() > 14) continue;
    bool solver_empty = false, oracle_empty = false;
    ExtremalReport a, b;
    try {
      a = solve_m(ctx);
    } catch (const no_cross_pair_error&) {
      solver_empty = true;
    }
    try {
      b = brute_force_m(ctx, 14);
    } catch (const no_cross_pair_error&) {
      oracle_empty = true;
    }
    if (solver_empty != oracle_empty) {
      ++mismatches;
      continue;
    }
    if (solver_empty) {
      ++agreements_on_empty;
      continue;
    }
    ++compared;
    if (a.m != b.m || !same_maximizers(a, b)) ++mismatches;
  }
  if (compared < 200) out.fail("only " + std::to_string(compared) + " contexts");
  if (mismatches > 0) out.fail(std::to_string(mismatches) + " disagreements");
  out.note(std::to_string(compared) + " contexts compared exactly, " +
           std::to_string(agreements_on_empty) + " agreed-empty");
  return out;
}

// 2. m(C([n],2), C([n],2), 1) = C(n,2) - C(n-2,2) + 1 and the 3-set fixture
Outcome criterion_pair_sum_values() {
  Outcome out;
  for (int n = 4; n <= 8; ++n) {
    CrossContext ctx = CrossContext::from_levels(power_set(n), 2, 2, 1);
    const std::uint64_t expect = static_cast<std::uint64_t>(
        binomial(n, 2) - binomial(n - 2, 2) + 1);
    const ExtremalReport rep = solve_m(ctx);
    if (rep.m != expect)
      out.fail("n=" + std::to_string(n) + ": solver " + std::to_string(rep.m) +
               " != " + std::to_string(expect));
    if (static_cast<int>(ctx.f.size()) <= 20) {
      const ExtremalReport oracle = brute_force_m(ctx, 20);
      if (oracle.m != expect || !same_maximizers(rep, oracle))
        out.fail("n=" + std::to_string(n) + ": oracle disagrees");
    }
  }
  CrossContext triples = CrossContext::from_levels(power_set(6), 3, 3, 1);
  const ExtremalReport rep = solve_m(triples);
  if (rep.m != 20) out.fail("3-sets of [6]: got " + std::to_string(rep.m));
  const ExtremalReport oracle = brute_force_m(triples, 20);
  if (oracle.m != 20 || !same_maximizers(rep, oracle))
    out.fail("3-sets of [6]: oracle disagrees");
  out.note("values C(n,2)-C(n-2,2)+1 for n=4..8 and 20 for 3-sets of [6]");
  return out;
}

// 3. mixed-level fixtures with the anchored star pair among the maximizers
Outcome criterion_mixed_level_fixtures() {
  Outcome out;
  {
    CrossContext ctx = CrossContext::from_levels(power_set(7), 2, 3, 1);
    const ExtremalReport rep = solve_m(ctx);
    if (rep.m != 26) out.fail("2x3 levels of [7]: m=" + std::to_string(rep.m));
    const SetFamily a = SetFamily::canonical(7, {GroundedSet::of(7, {1, 2})});
    const SetFamily b = meets_at_least(ctx.g, GroundedSet::of(7, {1, 2}), 1);
    bool found = false;
    for (const auto& mx : rep.maximizers)
      found = found || (mx.a == a && mx.b == b);
    if (!found) out.fail("anchored pair missing from the maximizer set");
  }
  {
    CrossContext ctx = CrossContext::from_levels(power_set(7), 3, 3, 2);
    const GroundedSet core = GroundedSet::of(7, {1, 2, 3});
    const std::uint64_t star_pair_sum =
        star(ctx.f, core).size() + meets_at_least(ctx.g, core, 2).size();
    if (star_pair_sum != 14)
      out.fail("star-pair evaluation: " + std::to_string(star_pair_sum));
    const ExtremalReport rep = solve_m(ctx);
    if (rep.m != 14) out.fail("3x3 levels of [7], t=2: m=" + std::to_string(rep.m));
    if (rep.m != star_pair_sum) out.fail("solver max differs from star pair");
  }
  out.note("m=26 with anchored pair present; m=14 = 1 + (1 + 3*4)");
  return out;
}

// 4+5. exhaustive structural check at (r,s,t)=(1,2,1) on [6], bases >= 5
Outcome criterion_structure_exhaustive(Outcome& eq1_out) {
  Outcome out;
  std::size_t families = 0, maximizers = 0;
  std::size_t unstructured = 0, swapped = 0, bad_witness = 0, eq1_violations = 0;
  enumerate_antichain_families(6, 5, 1000000, [&](const HereditaryFamily& h) {
    ++families;
    CrossContext ctx = CrossContext::from_levels(h, 1, 2, 1);
    ExtremalReport rep = classify_maximizers(solve_m(ctx), h);
    for (std::size_t i = 0; i < rep.maximizers.size(); ++i) {
      ++maximizers;
      const MaximizerClass& c = rep.classifications[i];
      if (c.shape == PairShape::unstructured) ++unstructured;
      if (c.shape == PairShape::swapped_star_pair) ++swapped;
      if (c.shape == PairShape::star_pair) {
        if (c.witness.size() != 1) ++bad_witness;
        const std::uint64_t sum = star(ctx.f, c.witness).size() +
                                  meets_at_least(ctx.g, c.witness, 1).size();
        if (sum != rep.m) ++eq1_violations;
      }
    }
    return true;
  });
  if (families != 64) out.fail("population size " + std::to_string(families));
  if (unstructured > 0)
    out.fail(std::to_string(unstructured) + " unstructured maximizers");
  if (swapped > 0) out.fail("swapped pattern appeared although r != s");
  if (bad_witness > 0) out.fail("witness size out of range");
  out.note(std::to_string(maximizers) + " maximizers over 64 families, all " +
           "star pairs with |I| = 1");
  if (eq1_violations > 0)
    eq1_out.fail(std::to_string(eq1_violations) + " witnesses missing the sum");
  else
    eq1_out.note("every witness I satisfies |F(I)| + |meets(G,I,1)| = m");
  if (!out.pass) eq1_out.fail("population check failed upstream");
  return out;
}

// 6. fuzz campaigns: 1000 instances per checker, zero failures
Outcome criterion_fuzz_campaigns(std::size_t& sum_bound_equalities) {
  Outcome out;
  for (const char* lemma : kLemmaIds) {
    const FuzzSummary s = run_fuzz(lemma, 1000, 20260808);
    if (s.instances != 1000)
      out.fail(std::string(lemma) + ": " + std::to_string(s.instances) +
               " instances");
    if (s.failures != 0)
      out.fail(std::string(lemma) + ": " + std::to_string(s.failures) +
               " holds=false");
    if (std::string(lemma) == "sum-bound") sum_bound_equalities = s.equalities;
  }
  out.note("10 checkers x 1000 seeded instances, zero holds=false");
  return out;
}

// 7. equality boundary of the sum bound
Outcome criterion_equality_boundary(std::size_t sum_bound_equalities) {
  Outcome out;
  const CheckResult boundary =
      check_sum_bound(power_set(3), 1, 2, 1, GroundedSet::of(3, {1}));
  if (!boundary.holds) out.fail("boundary instance fails");
  if (!boundary.equality) out.fail("boundary instance not an equality");
  if (!(boundary.certificate["equality_conditions"]["t_is_1"] == true &&
        boundary.certificate["equality_conditions"]["mu_is_r_plus_s"] == true))
    out.fail("equality conditions not satisfied");
  if (sum_bound_equalities == 0)
    out.fail("fuzz campaign recorded no equality instance");
  out.note(std::to_string(sum_bound_equalities) +
           " fuzz equality instances, all satisfying t=1 and mu=r+s");
  return out;
}

// 8. Galois laws and closedness of maximizers on 500 random instances
Outcome criterion_galois_properties() {
  Outcome out;
  SplitMix64 rng(404);
  int law_checks = 0, solved = 0;
  int guard = 0;
  while (law_checks < 500 && ++guard < 5000) {
    RandomSpec spec;
    spec.n = 5 + static_cast<int>(rng.below(4));
    spec.base_count = 1 + static_cast<int>(rng.below(3));
    spec.min_base = 3;
    spec.max_base = std::min(spec.n, 6);
    spec.mu_floor = 3;
    spec.seed = rng.next();
    HereditaryFamily h = random_hereditary(spec);
    const int t = 1 + static_cast<int>(rng.below(2));
    const int r = t + static_cast<int>(rng.below(2));
    const int s = r + static_cast<int>(rng.below(2));
    CrossContext ctx;
    try {
      ctx = CrossContext::from_levels(h, r, s, t);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (ctx.f.empty() || ctx.f.size() > 12 || ctx.g.size() > 12) continue;

    std::vector<GroundedSet> pick;
    for (const auto& m : ctx.f)
      if (rng.below(2) == 0) pick.push_back(m);
    if (pick.empty()) pick.push_back(ctx.f.at(0));
    const SetFamily a = SetFamily::canonical(ctx.f.ground(), pick);

    const SetFamily d1 = dual(a, ctx.g, t);
    const SetFamily c1 = dual(d1, ctx.f, t);
    for (const auto& m : a)
      if (!c1.contains(m)) out.fail("closure not extensive");
    if (!(dual(c1, ctx.g, t) == d1)) out.fail("triple dual broke");
    if (!(closure(c1, ctx) == c1)) out.fail("closure not idempotent");

    const SetFamily bigger = closure(a, ctx);
    const SetFamily d_big = dual(bigger, ctx.g, t);
    for (const auto& m : d_big)
      if (!d1.contains(m)) out.fail("dual not antitone");
    ++law_checks;

    try {
      const ExtremalReport rep = solve_m(ctx);
      ++solved;
      for (const auto& mx : rep.maximizers) {
        if (!(dual(mx.a, ctx.g, t) == mx.b)) out.fail("maximizer B != dual(A)");
        if (!(dual(mx.b, ctx.f, t) == mx.a)) out.fail("maximizer A != dual(B)");
      }
    } catch (const no_cross_pair_error&) {
    }
    if (!out.pass) break;
  }
  if (law_checks < 500)
    out.fail("only " + std::to_string(law_checks) + " instances exercised");
  out.note(std::to_string(law_checks) + " law instances, " +
           std::to_string(solved) + " solved for closedness");
  return out;
}

// 9. byte-identical CLI output for identical (config, inputs, seed)
Outcome criterion_cli_determinism() {
  Outcome out;
  namespace fs = std::filesystem;
  const fs::path dir = fs::current_path() / "acceptance_tmp";
  fs::create_directories(dir);
  const std::string cli = HFAM_CLI_PATH;
  auto run = [&](const std::string& args) {
    const std::string cmd = cli + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  auto compare_twice = [&](const std::string& args_template,
                           const std::string& label) {
    const std::string p1 = (dir / (label + "_1.out")).string();
    const std::string p2 = (dir / (label + "_2.out")).string();
    std::string a1 = args_template, a2 = args_template;
    const std::string token = "{OUT}";
    a1.replace(a1.find(token), token.size(), p1);
    a2.replace(a2.find(token), token.size(), p2);
    if (run(a1) != 0 || run(a2) != 0) {
      out.fail(label + ": nonzero exit");
      return;
    }
    if (read_file(p1) != read_file(p2)) out.fail(label + ": outputs differ");
    if (read_file(p1).empty()) out.fail(label + ": empty output");
  };

  const std::string ps4 = (dir / "ps4.json").string();
  if (run("gen --power-set 4 --out " + ps4) != 0) {
    out.fail("gen power-set failed");
    return out;
  }
  compare_twice(
      "gen --random --n 10 --bases 3 --min-size 5 --max-size 7 --mu-floor 5 "
      "--seed 5 --out {OUT}",
      "gen_random");
  compare_twice("solve --family " + ps4 + " --r 2 --s 2 --t 1 --out {OUT}",
                "solve");
  compare_twice("classify --family " + ps4 + " --r 2 --s 2 --t 1 --out {OUT}",
                "classify");
  compare_twice("check --lemma sperner --fuzz 50 --seed 3 --out {OUT}",
                "fuzz");
  compare_twice(
      "probe-eta --r 1 --s 2 --t 1 --n 7 --random --count 20 --seed 11 "
      "--bases 2 --out {OUT}",
      "probe_eta");
  out.note("gen/solve/classify/check-fuzz/probe-eta byte-stable across reruns");
  return out;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* label;
    Outcome outcome;
    double seconds;
  };
  std::vector<Row> rows;
  const auto timed = [&](int id, const char* label, auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    rows.push_back(Row{id, label, std::move(o), secs});
  };

  timed(1, "oracle equivalence on 200 random contexts",
        criterion_oracle_equivalence);
  timed(2, "pair-sum values on 2-level and 3-level fixtures",
        criterion_pair_sum_values);
  timed(3, "mixed-level fixtures with anchored star pairs",
        criterion_mixed_level_fixtures);

  Outcome eq1;
  timed(4, "exhaustive structural check at (1,2,1) on [6]",
        [&] { return criterion_structure_exhaustive(eq1); });
  rows.push_back(Row{5, "star-pair witnesses attain m in every instance", eq1, 0.0});

  std::size_t sum_bound_eq = 0;
  timed(6, "fuzz campaigns, 1000 instances per checker",
        [&] { return criterion_fuzz_campaigns(sum_bound_eq); });
  timed(7, "sum-bound equality boundary",
        [&] { return criterion_equality_boundary(sum_bound_eq); });
  timed(8, "galois laws and closedness of maximizers",
        criterion_galois_properties);
  timed(9, "byte-identical CLI reruns", criterion_cli_determinism);

  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.id < b.id; });
  int failed = 0;
  for (const auto& row : rows) {
    if (!row.outcome.pass) ++failed;
    std::printf("[%s] criterion %d: %s (%s) [%.1fs]\n",
                row.outcome.pass ? "PASS" : "FAIL", row.id, row.label,
                row.outcome.detail.c_str(), row.seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(rows.size()) - failed,
              rows.size());
  return failed;
}
