// hfam: exact workbench for cross-t-intersecting subfamilies of levels of
// hereditary families. Subcommands: gen, solve, classify, check, probe-eta,
// star-property. All reports are JSON with a reproducibility header; exit
// codes: 0 ok, 1 no cross-t-intersecting pair, 2 invalid input or hypothesis
// not met, 3 a proved check failed on a valid instance (bug certificate).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfam/construct.hpp"
#include "hfam/exact.hpp"
#include "hfam/family.hpp"
#include "hfam/galois.hpp"
#include "hfam/io.hpp"
#include "hfam/lemmas.hpp"

namespace {

using nlohmann::json;
using namespace hfam;

constexpr const char* kTool = "hfam";
constexpr const char* kVersion = "0.1.0";

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    return fallback;
  }
}

struct Output {
  std::string path;  // empty: stdout
  std::string format = "json";
};

struct LoadedFamily {
  HereditaryFamily family;
  json input_meta;
};

LoadedFamily load_family(const std::string& path) {
  const std::string text = read_file(path);
  ParsedFamily parsed = parse_family(text);
  LoadedFamily out;
  out.family = parsed.family;
  out.input_meta = {{"path", path},
                    {"digest", hex64(fnv1a64(text))},
                    {"reduced_to_antichain", parsed.reduced}};
  if (parsed.reduced)
    std::cerr << "warning: bases in " << path
              << " were not an antichain; absorbed members dropped\n";
  return out;
}

SetFamily load_set_family(const std::string& path, json& meta) {
  const std::string text = read_file(path);
  meta = {{"path", path}, {"digest", hex64(fnv1a64(text))}};
  return parse_set_family(text);
}

void emit(const Output& out, const json& envelope, const std::string& text_form) {
  if (out.format == "text") {
    if (out.path.empty())
      std::cout << text_form;
    else
      write_file(out.path, text_form);
    return;
  }
  const std::string body = envelope.dump(2) + "\n";
  if (out.path.empty())
    std::cout << body;
  else
    write_file(out.path, body);
}

json envelope(const std::string& command, const json& config, const json& inputs,
              const json& report) {
  return json{{"command", command}, {"config", config},   {"inputs", inputs},
              {"report", report},   {"tool", kTool},      {"version", kVersion}};
}

std::vector<int> parse_labels(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

int fail_invalid(const std::string& message) {
  std::cerr << json{{"error", message}, {"kind", "invalid-input"}}.dump() << "\n";
  return 2;
}

int fail_no_pair() {
  std::cerr << json{{"error", "no cross-t-intersecting pair exists"},
                    {"kind", "no-pair"}}
                   .dump()
            << "\n";
  return 1;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  int power_set_n = -1;
  std::string graph_path;
  bool random = false;
  RandomSpec spec;
  Output out;
};

int run_gen(const GenArgs& a) {
  HereditaryFamily h;
  json config{{"command", "gen"}};
  json inputs = json::object();
  if (a.power_set_n >= 0) {
    h = power_set(a.power_set_n);
    config["power_set"] = a.power_set_n;
  } else if (!a.graph_path.empty()) {
    const std::string text = read_file(a.graph_path);
    inputs["graph"] = {{"path", a.graph_path}, {"digest", hex64(fnv1a64(text))}};
    h = independence_complex(parse_graph(text));
    config["graph"] = a.graph_path;
  } else if (a.random) {
    h = random_hereditary(a.spec);
    config["random"] = {{"n", a.spec.n},
                        {"base_count", a.spec.base_count},
                        {"min_base", a.spec.min_base},
                        {"max_base", a.spec.max_base},
                        {"mu_floor", a.spec.mu_floor},
                        {"seed", a.spec.seed}};
  } else {
    return fail_invalid("gen needs one of --power-set, --graph, --random");
  }
  const std::string body = serialize_family(h);
  if (a.out.path.empty())
    std::cout << body;
  else
    write_file(a.out.path, body);
  return 0;
}

struct SolveArgs {
  std::string family_path;
  int r = 0, s = 0, t = 0;
  bool oracle = false;
  int oracle_cap = 20;
  int workers = 1;
  bool timing = false;
  bool classify = false;
  Output out;
};

int run_solve(const SolveArgs& a) {
  LoadedFamily lf = load_family(a.family_path);
  CrossContext ctx = CrossContext::from_levels(lf.family, a.r, a.s, a.t);
  ExtremalReport rep;
  try {
    if (a.oracle) {
      rep = brute_force_m(ctx, a.oracle_cap);
    } else {
      SolveOptions opts;
      opts.workers = a.workers;
      opts.measure_time = a.timing;
      rep = solve_m(ctx, opts);
    }
  } catch (const no_cross_pair_error&) {
    return fail_no_pair();
  }
  if (a.classify) rep = classify_maximizers(std::move(rep), lf.family);

  json config{{"command", a.classify ? "classify" : "solve"},
              {"r", a.r},
              {"s", a.s},
              {"t", a.t},
              {"oracle", a.oracle},
              {"oracle_cap", a.oracle_cap},
              {"workers", a.workers},
              {"timing", a.timing}};
  std::ostringstream text;
  text << "m = " << rep.m << " with " << rep.maximizers.size()
       << " maximizer(s); closed pairs visited: "
       << rep.stats.closed_pairs_visited << "\n";
  if (a.classify) {
    std::size_t stars = 0, swapped = 0, unstructured = 0;
    for (const auto& c : rep.classifications) {
      if (c.shape == PairShape::star_pair) ++stars;
      else if (c.shape == PairShape::swapped_star_pair) ++swapped;
      else ++unstructured;
    }
    text << "classification: " << stars << " star, " << swapped << " swapped, "
         << unstructured << " unstructured\n";
  }
  emit(a.out,
       envelope(a.classify ? "classify" : "solve", config,
                json{{"family", lf.input_meta}}, report_to_json(rep)),
       text.str());
  return 0;
}

struct CheckArgs {
  std::string lemma;
  std::string family_path;      // hereditary
  std::string set_family_path;  // plain
  std::string a_path, b_path;
  std::string x_csv, y_csv, i_csv, tset_csv, uset_csv;
  int r = -1, s = -1, t = -1;
  std::uint64_t n = 0;
  std::size_t fuzz = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  Output out;
};

CheckResult dispatch_single_check(const CheckArgs& a, json& inputs) {
  std::optional<HereditaryFamily> h;
  if (!a.family_path.empty()) {
    LoadedFamily lf = load_family(a.family_path);
    h = lf.family;
    inputs["family"] = lf.input_meta;
  }
  auto need_h = [&]() -> const HereditaryFamily& {
    if (!h) throw std::invalid_argument("this check needs --family");
    return *h;
  };
  auto labels = [&](const std::string& csv) {
    return GroundedSet::of(need_h().ground(), parse_labels(csv));
  };

  if (a.lemma == "sperner") return check_sperner(need_h(), a.r, a.s);
  if (a.lemma == "mu-trace")
    return check_mu_trace(need_h(), labels(a.x_csv), labels(a.y_csv));
  if (a.lemma == "mu-link") {
    json meta;
    SetFamily f = load_set_family(a.set_family_path, meta);
    inputs["set_family"] = meta;
    return check_mu_link(f, GroundedSet::of(f.ground(), parse_labels(a.x_csv)));
  }
  if (a.lemma == "fiber-count")
    return check_fiber_count(need_h(), a.r, a.s, a.t, labels(a.tset_csv),
                             labels(a.uset_csv));
  if (a.lemma == "transversal-cover") {
    json meta;
    SetFamily f = load_set_family(a.set_family_path, meta);
    inputs["set_family"] = meta;
    return check_transversal_cover(
        f, GroundedSet::of(f.ground(), parse_labels(a.x_csv)), a.t);
  }
  if (a.lemma == "transversal-partition") {
    json meta;
    SetFamily f = load_set_family(a.set_family_path, meta);
    inputs["set_family"] = meta;
    return check_transversal_partition(
        f, GroundedSet::of(f.ground(), parse_labels(a.x_csv)),
        GroundedSet::of(f.ground(), parse_labels(a.tset_csv)), a.t);
  }
  if (a.lemma == "transversal-chain") {
    json ma, mb;
    SetFamily fa = load_set_family(a.a_path, ma);
    SetFamily fb = load_set_family(a.b_path, mb);
    inputs["A"] = ma;
    inputs["B"] = mb;
    return check_transversal_chain(fa, fb, a.r, a.s, a.t);
  }
  if (a.lemma == "transversal-star-bound") {
    json ma, mb;
    SetFamily fa = load_set_family(a.a_path, ma);
    SetFamily fb = load_set_family(a.b_path, mb);
    inputs["A"] = ma;
    inputs["B"] = mb;
    return check_transversal_star_bound(need_h(), fa, fb, a.r, a.s, a.t);
  }
  if (a.lemma == "calc") return check_calc(a.r, a.s, a.t, a.n);
  if (a.lemma == "sum-bound")
    return check_sum_bound(need_h(), a.r, a.s, a.t, labels(a.i_csv));
  if (a.lemma == "sum-conjecture")
    return probe_sum_conjecture(need_h(), a.r, a.s, a.t);
  throw std::invalid_argument("unknown lemma id: " + a.lemma);
}

int run_check(const CheckArgs& a) {
  json config{{"command", "check"}, {"lemma", a.lemma}};
  if (a.fuzz > 0) {
    config["fuzz"] = a.fuzz;
    config["seed"] = a.seed;
    config["workers"] = a.workers;
    std::vector<std::string> lines;
    std::vector<std::string> ids;
    if (a.lemma == "all")
      ids.assign(std::begin(kLemmaIds), std::end(kLemmaIds));
    else
      ids.push_back(a.lemma);
    json campaigns = json::array();
    bool failed = false;
    std::ostringstream text;
    for (const auto& id : ids) {
      FuzzSummary summary =
          run_fuzz(id, a.fuzz, a.seed, a.workers,
                   [&](const json& line) { lines.push_back(line.dump()); });
      json entry{{"lemma", id},
                 {"instances", summary.instances},
                 {"failures", summary.failures},
                 {"equalities", summary.equalities},
                 {"hypothesis_misses", summary.hypothesis_misses}};
      if (summary.failures > 0) {
        failed = true;
        json fl = json::array();
        for (const auto& f : summary.failed) fl.push_back(f.to_json());
        entry["failed"] = fl;
      }
      campaigns.push_back(entry);
      text << id << ": " << summary.instances << " instances, "
           << summary.failures << " failures, " << summary.equalities
           << " equalities\n";
    }
    if (!a.out.path.empty()) {
      std::string body;
      for (const auto& l : lines) body += l + "\n";
      write_file(a.out.path, body);
    }
    json env = envelope("check", config, json::object(),
                        json{{"campaigns", campaigns}});
    std::cout << (a.out.format == "text" ? text.str() : env.dump(2) + "\n");
    if (failed) {
      std::cerr << json{{"error", "proved check failed on a valid instance"},
                        {"kind", "check-failed"}}
                       .dump()
                << "\n";
      return 3;
    }
    return 0;
  }

  json inputs = json::object();
  CheckResult result = dispatch_single_check(a, inputs);
  for (const auto& [k, v] :
       std::initializer_list<std::pair<const char*, int>>{{"r", a.r},
                                                          {"s", a.s},
                                                          {"t", a.t}})
    if (v >= 0) config[k] = v;
  std::ostringstream text;
  text << result.lemma << ": " << (result.holds ? "holds" : "FAILS") << " (lhs "
       << to_decimal(result.lhs) << ", rhs " << to_decimal(result.rhs)
       << (result.equality ? ", equality" : "") << ")\n";
  emit(a.out, envelope("check", config, inputs, result.to_json()), text.str());
  if (!result.holds && result.assertive) {
    std::cerr << json{{"error", "proved check failed on a valid instance"},
                      {"kind", "check-failed"},
                      {"lemma", result.lemma}}
                     .dump()
              << "\n";
    return 3;
  }
  return 0;
}

struct EtaArgs {
  int r = 1, s = 1, t = 1;
  EtaProbeSpec spec;
  Output out;
};

int run_probe_eta(const EtaArgs& a) {
  std::vector<std::string> lines;
  EtaProbeReport rep = probe_eta(a.r, a.s, a.t, a.spec, [&](const json& line) {
    lines.push_back(line.dump());
  });
  if (!a.out.path.empty()) {
    std::string body;
    for (const auto& l : lines) body += l + "\n";
    write_file(a.out.path, body);
  }
  json config{{"command", "probe-eta"},
              {"r", a.r},
              {"s", a.s},
              {"t", a.t},
              {"n", a.spec.n},
              {"exhaustive", a.spec.exhaustive},
              {"min_base", a.spec.min_base},
              {"seed", a.spec.seed},
              {"count", a.spec.count},
              {"base_count", a.spec.base_count}};
  json cex = json::array();
  for (const auto& c : rep.counterexamples)
    cex.push_back(json{{"family", family_to_json(c.family)},
                       {"m", c.m},
                       {"best_star_sum", c.best_star_sum}});
  json report{{"instances", rep.instances},
              {"no_pair", rep.no_pair},
              {"counterexamples", cex}};
  std::ostringstream text;
  text << "probed " << rep.instances << " families; counterexample candidates: "
       << rep.counterexamples.size() << "\n";
  std::cout << (a.out.format == "text"
                    ? text.str()
                    : envelope("probe-eta", config, json::object(), report)
                              .dump(2) +
                          "\n");
  return 0;
}

struct StarArgs {
  std::string family_path;
  int r = 1, t = 1;
  int cap = 25;
  Output out;
};

int run_star_property(const StarArgs& a) {
  LoadedFamily lf = load_family(a.family_path);
  SetFamily lv = level(lf.family, a.r);
  StarPropertyResult res = max_t_intersecting(lv, a.t, a.cap);
  json config{{"command", "star-property"},
              {"r", a.r},
              {"t", a.t},
              {"cap", a.cap}};
  json report{{"level_size", lv.size()},
              {"size", res.size},
              {"witness", members_to_json(res.witness)},
              {"star_attained", res.star_attained},
              {"best_star_size", res.best_star_size},
              {"best_star_core", set_to_json(res.best_star_core)}};
  std::ostringstream text;
  text << "largest t-intersecting subfamily: " << res.size
       << (res.star_attained ? " (a star attains it)\n"
                             : " (no star attains it)\n");
  emit(a.out, envelope("star-property", config, json{{"family", lf.input_meta}},
                       report),
       text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cross-intersection workbench for hereditary families"};
  app.require_subcommand(1);

  const int default_workers = env_int("HFAM_WORKERS", 1);
  const int default_oracle_cap = env_int("HFAM_ORACLE_CAP", 20);
  const int default_clique_cap = env_int("HFAM_CLIQUE_CAP", 25);

  GenArgs gen;
  gen.spec = RandomSpec{8, 3, 4, 6, 4, 0};
  auto* g = app.add_subcommand("gen", "generate a hereditary family");
  g->add_option("--power-set", gen.power_set_n, "bases = {[n]}");
  g->add_option("--graph", gen.graph_path, "independence complex of a graph file");
  g->add_flag("--random", gen.random, "seeded random family");
  g->add_option("--n", gen.spec.n, "ground size");
  g->add_option("--bases", gen.spec.base_count, "number of drawn bases");
  g->add_option("--min-size", gen.spec.min_base, "minimum base size");
  g->add_option("--max-size", gen.spec.max_base, "maximum base size");
  g->add_option("--mu-floor", gen.spec.mu_floor, "required lower bound on mu");
  g->add_option("--seed", gen.spec.seed, "generator seed");
  g->add_option("--out", gen.out.path, "output path (stdout if omitted)");

  SolveArgs solve;
  solve.workers = default_workers;
  solve.oracle_cap = default_oracle_cap;
  auto add_solve_opts = [&](CLI::App* cmd, SolveArgs& args) {
    cmd->add_option("--family", args.family_path, "hereditary family file")
        ->required();
    cmd->add_option("--r", args.r)->required();
    cmd->add_option("--s", args.s)->required();
    cmd->add_option("--t", args.t)->required();
    cmd->add_flag("--oracle", args.oracle, "use the subset-enumeration oracle");
    cmd->add_option("--oracle-cap", args.oracle_cap, "oracle size cap");
    cmd->add_option("--workers", args.workers, "search worker count");
    cmd->add_flag("--timing", args.timing, "record wall-clock elapsed_ms");
    cmd->add_option("--out", args.out.path, "output path");
    cmd->add_option("--format", args.out.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto* sv = app.add_subcommand("solve", "maximize |A|+|B| over closed pairs");
  add_solve_opts(sv, solve);

  SolveArgs classify = solve;
  auto* cf = app.add_subcommand("classify", "solve, then tag every maximizer");
  add_solve_opts(cf, classify);

  CheckArgs check;
  check.workers = default_workers;
  auto* ck = app.add_subcommand("check", "run one checker or a fuzz campaign");
  ck->add_option("--lemma", check.lemma, "checker id or 'all' (fuzz mode)")
      ->required();
  ck->add_option("--family", check.family_path, "hereditary family file");
  ck->add_option("--set-family", check.set_family_path, "plain family file");
  ck->add_option("--a", check.a_path, "left family file");
  ck->add_option("--b", check.b_path, "right family file");
  ck->add_option("--x", check.x_csv, "set X as comma-separated labels");
  ck->add_option("--y", check.y_csv, "set Y");
  ck->add_option("--i", check.i_csv, "set I");
  ck->add_option("--tset", check.tset_csv, "set T");
  ck->add_option("--uset", check.uset_csv, "set U");
  ck->add_option("--r", check.r);
  ck->add_option("--s", check.s);
  ck->add_option("--t", check.t);
  ck->add_option("--n", check.n);
  ck->add_option("--fuzz", check.fuzz, "instance count (campaign mode)");
  ck->add_option("--seed", check.seed, "campaign seed");
  ck->add_option("--workers", check.workers, "campaign worker count");
  ck->add_option("--out", check.out.path, "JSONL output path (campaign)");
  ck->add_option("--format", check.out.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  EtaArgs eta;
  auto* pe = app.add_subcommand("probe-eta", "search for star-pair failures");
  pe->add_option("--r", eta.r)->required();
  pe->add_option("--s", eta.s)->required();
  pe->add_option("--t", eta.t)->required();
  pe->add_option("--n", eta.spec.n, "ground size")->required();
  pe->add_flag("--exhaustive", eta.spec.exhaustive,
               "enumerate every antichain population member");
  bool random_mode = false;
  pe->add_flag("--random", random_mode, "seeded random population");
  pe->add_option("--min-base", eta.spec.min_base, "base size floor");
  pe->add_option("--seed", eta.spec.seed);
  pe->add_option("--count", eta.spec.count, "random population size");
  pe->add_option("--bases", eta.spec.base_count, "bases per random family");
  pe->add_option("--max-instances", eta.spec.max_instances);
  pe->add_option("--out", eta.out.path, "JSONL output path");
  pe->add_option("--format", eta.out.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  StarArgs star;
  star.cap = default_clique_cap;
  auto* sp = app.add_subcommand("star-property",
                                "largest t-intersecting subfamily of a level");
  sp->add_option("--family", star.family_path)->required();
  sp->add_option("--r", star.r)->required();
  sp->add_option("--t", star.t)->required();
  sp->add_option("--cap", star.cap, "clique search size cap");
  sp->add_option("--out", star.out.path, "output path");
  sp->add_option("--format", star.out.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (g->parsed()) return run_gen(gen);
    if (sv->parsed()) return run_solve(solve);
    if (cf->parsed()) {
      classify.classify = true;
      return run_solve(classify);
    }
    if (ck->parsed()) return run_check(check);
    if (pe->parsed()) {
      if (random_mode) eta.spec.exhaustive = false;
      return run_probe_eta(eta);
    }
    if (sp->parsed()) return run_star_property(star);
  } catch (const no_cross_pair_error&) {
    return fail_no_pair();
  } catch (const hypothesis_error& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "hypothesis"}}.dump()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    return fail_invalid(e.what());
  }
  return 2;
}
