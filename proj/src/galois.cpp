#include "hfam/galois.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

namespace hfam {

namespace {

int words_for(int bits) { return (bits + 63) / 64; }

void fill_full(std::uint64_t* p, int bits) {
  const int w = words_for(bits);
  for (int i = 0; i < w; ++i) p[i] = ~std::uint64_t{0};
  const int tail = bits % 64;
  if (w > 0 && tail != 0) p[w - 1] = (std::uint64_t{1} << tail) - 1;
}

int popcount_words(const std::uint64_t* p, int w) {
  int c = 0;
  for (int i = 0; i < w; ++i) c += std::popcount(p[i]);
  return c;
}

bool any_word(const std::uint64_t* p, int w) {
  for (int i = 0; i < w; ++i)
    if (p[i]) return true;
  return false;
}

bool test_bit(const std::uint64_t* p, int i) {
  return (p[i >> 6] >> (i & 63)) & 1u;
}

// Pairwise t-intersection incidence between the two sides, one bit row per
// member. dual() of a growing extent is an AND-chain over these rows.
struct Relation {
  int f = 0, g = 0, wf = 0, wg = 0, t = 0;
  std::vector<std::uint64_t> fg;  // f rows of wg words: G-sets t-meeting F[i]
  std::vector<std::uint64_t> gf;  // g rows of wf words

  static Relation build(const CrossContext& ctx) {
    Relation r;
    r.f = static_cast<int>(ctx.f.size());
    r.g = static_cast<int>(ctx.g.size());
    r.wf = std::max(1, words_for(r.f));
    r.wg = std::max(1, words_for(r.g));
    r.t = ctx.t;
    r.fg.assign(static_cast<std::size_t>(r.f) * r.wg, 0);
    r.gf.assign(static_cast<std::size_t>(r.g) * r.wf, 0);
    for (int i = 0; i < r.f; ++i)
      for (int j = 0; j < r.g; ++j)
        if (intersection_size(ctx.f.at(static_cast<std::size_t>(i)),
                              ctx.g.at(static_cast<std::size_t>(j))) >= ctx.t) {
          r.fg[static_cast<std::size_t>(i) * r.wg + (j >> 6)] |=
              std::uint64_t{1} << (j & 63);
          r.gf[static_cast<std::size_t>(j) * r.wf + (i >> 6)] |=
              std::uint64_t{1} << (i & 63);
        }
    return r;
  }

  const std::uint64_t* row_fg(int i) const {
    return fg.data() + static_cast<std::size_t>(i) * wg;
  }
  const std::uint64_t* row_gf(int j) const {
    return gf.data() + static_cast<std::size_t>(j) * wf;
  }

  // Extent of an intent: AND of gf rows over the set bits of b.
  void extent_of(const std::uint64_t* b, std::uint64_t* out) const {
    fill_full(out, f);
    for (int w = 0; w < wg; ++w) {
      std::uint64_t word = b[w];
      while (word) {
        const int j = (w << 6) + std::countr_zero(word);
        const std::uint64_t* row = row_gf(j);
        for (int k = 0; k < wf; ++k) out[k] &= row[k];
        word &= word - 1;
      }
    }
  }
};

struct Candidate {
  int sum;
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
};

struct Shared {
  const Relation* rel = nullptr;
  std::atomic<int> best{0};
  std::atomic<std::uint64_t> visited{0};
};

// Close-by-One over extents in lectic child order. Invariants at every call:
// `a` is closed, `b` = dual(a), generators below `j` are settled. A child is
// pruned when even |a| + remaining generators + |dual| cannot reach the best
// sum (strict <, so ties survive and the maximizer set stays complete).
struct Searcher {
  Shared* sh;
  std::vector<Candidate> found;

  void consider(const std::vector<std::uint64_t>& a,
                const std::vector<std::uint64_t>& b, int pa, int pb) {
    if (pa == 0 || pb == 0) return;
    const int sum = pa + pb;
    int cur = sh->best.load(std::memory_order_relaxed);
    while (sum > cur &&
           !sh->best.compare_exchange_weak(cur, sum, std::memory_order_relaxed)) {
    }
    if (sum >= sh->best.load(std::memory_order_relaxed))
      found.push_back(Candidate{sum, a, b});
  }

  void run(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
           int j) {
    const Relation& rel = *sh->rel;
    sh->visited.fetch_add(1, std::memory_order_relaxed);
    const int pa = popcount_words(a.data(), rel.wf);
    consider(a, b, pa, popcount_words(b.data(), rel.wg));

    std::vector<std::uint64_t> b2(static_cast<std::size_t>(rel.wg));
    std::vector<std::uint64_t> a2(static_cast<std::size_t>(rel.wf));
    int rem = 0;  // generators in [i, f) outside a, maintained backwards
    std::vector<int> rem_at(static_cast<std::size_t>(rel.f - j + 1), 0);
    for (int i = rel.f - 1; i >= j; --i) {
      if (!test_bit(a.data(), i)) ++rem;
      rem_at[static_cast<std::size_t>(i - j)] = rem;
    }
    for (int i = j; i < rel.f; ++i) {
      if (test_bit(a.data(), i)) continue;
      const std::uint64_t* row = rel.row_fg(i);
      bool nonzero = false;
      for (int w = 0; w < rel.wg; ++w) {
        b2[static_cast<std::size_t>(w)] = b[static_cast<std::size_t>(w)] & row[w];
        nonzero |= b2[static_cast<std::size_t>(w)] != 0;
      }
      if (!nonzero) continue;  // every extension of a∪{i} has an empty side
      const int rem_after =
          i + 1 <= rel.f - 1 ? rem_at[static_cast<std::size_t>(i + 1 - j)] : 0;
      const int optimistic =
          pa + 1 + rem_after + popcount_words(b2.data(), rel.wg);
      if (optimistic < sh->best.load(std::memory_order_relaxed)) continue;
      rel.extent_of(b2.data(), a2.data());
      // canonicity: the closure may not introduce generators below i
      bool canonical = true;
      for (int w = 0; w < rel.wf && canonical; ++w) {
        std::uint64_t prefix;
        if ((i >> 6) > w)
          prefix = ~std::uint64_t{0};
        else if ((i >> 6) == w)
          prefix = (std::uint64_t{1} << (i & 63)) - 1;
        else
          prefix = 0;
        canonical = ((a2[static_cast<std::size_t>(w)] ^
                      a[static_cast<std::size_t>(w)]) &
                     prefix) == 0;
      }
      if (canonical) run(a2, b2, i + 1);
    }
  }
};

SetFamily family_from_mask(const SetFamily& universe, const std::uint64_t* mask,
                           int words) {
  std::vector<GroundedSet> out;
  for (int w = 0; w < words; ++w) {
    std::uint64_t word = mask[w];
    while (word) {
      const int i = (w << 6) + std::countr_zero(word);
      out.push_back(universe.at(static_cast<std::size_t>(i)));
      word &= word - 1;
    }
  }
  return SetFamily::canonical(universe.ground(), std::move(out));
}

std::vector<CrossPair> harvest(const CrossContext& ctx,
                               std::vector<Candidate> all, int best) {
  std::vector<CrossPair> pairs;
  for (auto& c : all) {
    if (c.sum != best) continue;
    pairs.push_back(CrossPair{
        family_from_mask(ctx.f, c.a.data(), words_for(static_cast<int>(ctx.f.size()))),
        family_from_mask(ctx.g, c.b.data(), words_for(static_cast<int>(ctx.g.size())))});
  }
  std::sort(pairs.begin(), pairs.end(), [](const CrossPair& x, const CrossPair& y) {
    if (x.a == y.a) return family_less(x.b, y.b);
    return family_less(x.a, y.a);
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [](const CrossPair& x, const CrossPair& y) {
                            return x.a == y.a && x.b == y.b;
                          }),
              pairs.end());
  return pairs;
}

}  // namespace

CrossContext CrossContext::make(SetFamily f, SetFamily g, int r, int s, int t) {
  if (!(1 <= t && t <= r && r <= s))
    throw std::invalid_argument("require 1 <= t <= r <= s");
  if (f.ground() != g.ground())
    throw std::invalid_argument("ground size mismatch between sides");
  if (!f.uniform(r)) throw std::invalid_argument("left side is not r-uniform");
  if (!g.uniform(s)) throw std::invalid_argument("right side is not s-uniform");
  CrossContext ctx;
  ctx.f = std::move(f);
  ctx.g = std::move(g);
  ctx.r = r;
  ctx.s = s;
  ctx.t = t;
  return ctx;
}

CrossContext CrossContext::from_levels(const HereditaryFamily& h, int r, int s,
                                       int t) {
  return make(level(h, r), level(h, s), r, s, t);
}

SetFamily dual(const SetFamily& s, const SetFamily& target, int t) {
  std::vector<GroundedSet> out;
  for (const auto& x : target) {
    bool ok = true;
    for (const auto& a : s) {
      if (intersection_size(x, a) < t) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return SetFamily::canonical(target.ground(), std::move(out));
}

SetFamily closure(const SetFamily& a, const CrossContext& ctx) {
  for (const auto& m : a)
    if (!ctx.f.contains(m))
      throw std::invalid_argument("closure argument is not a subfamily");
  return dual(dual(a, ctx.g, ctx.t), ctx.f, ctx.t);
}

ExtremalReport solve_m(const CrossContext& ctx, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Relation rel = Relation::build(ctx);

  bool any_pair = false;
  for (int i = 0; i < rel.f && !any_pair; ++i)
    any_pair = any_word(rel.row_fg(i), rel.wg);
  if (!any_pair) throw no_cross_pair_error();

  Shared sh;
  sh.rel = &rel;
  // Seed with the best single-generator pair; its closure is a closed pair
  // with at least this sum, so the bound is attainable.
  int seed = 0;
  for (int i = 0; i < rel.f; ++i)
    seed = std::max(seed, 1 + popcount_words(rel.row_fg(i), rel.wg));
  sh.best.store(seed, std::memory_order_relaxed);

  // Root: closure of the empty extent.
  std::vector<std::uint64_t> b0(static_cast<std::size_t>(rel.wg));
  fill_full(b0.data(), rel.g);
  std::vector<std::uint64_t> a0(static_cast<std::size_t>(rel.wf));
  rel.extent_of(b0.data(), a0.data());

  std::vector<Candidate> all;
  const int workers = std::max(1, opts.workers);
  if (workers == 1) {
    Searcher se{&sh, {}};
    se.run(a0, b0, 0);
    all = std::move(se.found);
  } else {
    // Partition the top-level branches; the shared best only improves, so a
    // stale read merely prunes less.
    sh.visited.fetch_add(1, std::memory_order_relaxed);
    {
      Searcher root{&sh, {}};
      root.consider(a0, b0, popcount_words(a0.data(), rel.wf),
                    popcount_words(b0.data(), rel.wg));
      all.insert(all.end(), root.found.begin(), root.found.end());
    }
    struct Task {
      std::vector<std::uint64_t> a, b;
      int j;
    };
    std::vector<Task> tasks;
    std::vector<std::uint64_t> b2(static_cast<std::size_t>(rel.wg));
    std::vector<std::uint64_t> a2(static_cast<std::size_t>(rel.wf));
    for (int i = 0; i < rel.f; ++i) {
      if (test_bit(a0.data(), i)) continue;
      const std::uint64_t* row = rel.row_fg(i);
      bool nonzero = false;
      for (int w = 0; w < rel.wg; ++w) {
        b2[static_cast<std::size_t>(w)] = b0[static_cast<std::size_t>(w)] & row[w];
        nonzero |= b2[static_cast<std::size_t>(w)] != 0;
      }
      if (!nonzero) continue;
      rel.extent_of(b2.data(), a2.data());
      bool canonical = true;
      for (int w = 0; w < rel.wf && canonical; ++w) {
        std::uint64_t prefix;
        if ((i >> 6) > w)
          prefix = ~std::uint64_t{0};
        else if ((i >> 6) == w)
          prefix = (std::uint64_t{1} << (i & 63)) - 1;
        else
          prefix = 0;
        canonical = ((a2[static_cast<std::size_t>(w)] ^
                      a0[static_cast<std::size_t>(w)]) &
                     prefix) == 0;
      }
      if (canonical) tasks.push_back(Task{a2, b2, i + 1});
    }
    std::vector<Searcher> per(static_cast<std::size_t>(workers), Searcher{&sh, {}});
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = static_cast<std::size_t>(w); k < tasks.size();
             k += static_cast<std::size_t>(workers))
          per[static_cast<std::size_t>(w)].run(tasks[k].a, tasks[k].b, tasks[k].j);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& se : per) all.insert(all.end(), se.found.begin(), se.found.end());
  }

  const int best = sh.best.load();
  ExtremalReport rep;
  rep.context = ctx;
  rep.m = static_cast<std::uint64_t>(best);
  rep.maximizers = harvest(ctx, std::move(all), best);
  rep.stats.closed_pairs_visited = sh.visited.load();
  if (opts.measure_time)
    rep.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  return rep;
}

ExtremalReport brute_force_m(const CrossContext& ctx, int cap) {
  if (cap > 62) cap = 62;
  const int f = static_cast<int>(ctx.f.size());
  const int g = static_cast<int>(ctx.g.size());
  if (f > cap) throw cap_error("oracle cap");
  const int wg = std::max(1, words_for(g));

  // Independent incidence pass (deliberately not shared with the solver).
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(std::max(1, f)) * wg, 0);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < g; ++j)
      if (intersection_size(ctx.f.at(static_cast<std::size_t>(i)),
                            ctx.g.at(static_cast<std::size_t>(j))) >= ctx.t)
        rows[static_cast<std::size_t>(i) * wg + (j >> 6)] |= std::uint64_t{1}
                                                             << (j & 63);

  int best = 0;
  std::uint64_t evaluated = 0;
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> maxima;

  // one dual buffer per recursion depth, so the walk never allocates
  std::vector<std::uint64_t> depth_duals(
      static_cast<std::size_t>(f + 1) * wg, 0);
  fill_full(depth_duals.data(), g);

  struct Rec {
    int f, wg, g;
    const std::vector<std::uint64_t>& rows;
    std::vector<std::uint64_t>& duals;
    int& best;
    std::uint64_t& evaluated;
    std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>& maxima;
    void run(int i, std::uint64_t amask, int acount, int depth) {
      const std::uint64_t* b = duals.data() + static_cast<std::size_t>(depth) * wg;
      if (i == f) {
        if (acount == 0) return;
        const int pb = popcount_words(b, wg);
        if (pb == 0) return;
        ++evaluated;
        const int sum = acount + pb;
        if (sum > best) {
          best = sum;
          maxima.clear();
        }
        if (sum == best)
          maxima.emplace_back(amask, std::vector<std::uint64_t>(b, b + wg));
        return;
      }
      run(i + 1, amask, acount, depth);  // exclude F[i]
      std::uint64_t* b2 = duals.data() + static_cast<std::size_t>(depth + 1) * wg;
      bool nonzero = false;
      const std::uint64_t* row = rows.data() + static_cast<std::size_t>(i) * wg;
      for (int w = 0; w < wg; ++w) {
        b2[w] = b[w] & row[w];
        nonzero |= b2[w] != 0;
      }
      if (nonzero)  // include F[i]; supersets of a dead dual stay dead
        run(i + 1, amask | (std::uint64_t{1} << i), acount + 1, depth + 1);
    }
  } rec{f, wg, g, rows, depth_duals, best, evaluated, maxima};
  rec.run(0, 0, 0, 0);

  if (best == 0) throw no_cross_pair_error();

  std::vector<Candidate> all;
  all.reserve(maxima.size());
  for (auto& [amask, bwords] : maxima) {
    std::vector<std::uint64_t> aw(static_cast<std::size_t>(std::max(1, words_for(f))), 0);
    aw[0] = amask;
    all.push_back(Candidate{best, std::move(aw), std::move(bwords)});
  }
  ExtremalReport rep;
  rep.context = ctx;
  rep.m = static_cast<std::uint64_t>(best);
  rep.maximizers = harvest(ctx, std::move(all), best);
  rep.stats.closed_pairs_visited = evaluated;
  return rep;
}

ExtremalReport classify_maximizers(ExtremalReport report,
                                   const HereditaryFamily& h) {
  const CrossContext& ctx = report.context;
  if (!(level(h, ctx.r) == ctx.f) || !(level(h, ctx.s) == ctx.g))
    throw std::invalid_argument("context is not the (r, s) levels of the family");

  const int f = static_cast<int>(ctx.f.size());
  const int g = static_cast<int>(ctx.g.size());
  const int wf = std::max(1, words_for(f));
  const int wg = std::max(1, words_for(g));

  struct Pattern {
    GroundedSet witness;
    std::vector<std::uint64_t> star_f, meets_g;  // star orientation
    std::vector<std::uint64_t> meets_f, star_g;  // swapped orientation
    bool swapped_applicable = false;
  };
  std::vector<Pattern> patterns;
  for (int u = ctx.t; u <= ctx.r; ++u) {
    for (const auto& iset : level(h, u)) {
      Pattern p;
      p.witness = iset;
      p.star_f.assign(static_cast<std::size_t>(wf), 0);
      p.meets_g.assign(static_cast<std::size_t>(wg), 0);
      for (int i = 0; i < f; ++i)
        if (iset.subset_of(ctx.f.at(static_cast<std::size_t>(i))))
          p.star_f[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
      for (int j = 0; j < g; ++j)
        if (intersection_size(ctx.g.at(static_cast<std::size_t>(j)), iset) >= ctx.t)
          p.meets_g[static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
      if (ctx.r == ctx.s && u > ctx.t) {
        p.swapped_applicable = true;
        p.meets_f.assign(static_cast<std::size_t>(wf), 0);
        p.star_g.assign(static_cast<std::size_t>(wg), 0);
        for (int i = 0; i < f; ++i)
          if (intersection_size(ctx.f.at(static_cast<std::size_t>(i)), iset) >= ctx.t)
            p.meets_f[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
        for (int j = 0; j < g; ++j)
          if (iset.subset_of(ctx.g.at(static_cast<std::size_t>(j))))
            p.star_g[static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
      }
      patterns.push_back(std::move(p));
    }
  }

  report.classifications.clear();
  report.classifications.reserve(report.maximizers.size());
  for (const auto& pair : report.maximizers) {
    std::vector<std::uint64_t> am(static_cast<std::size_t>(wf), 0);
    std::vector<std::uint64_t> bm(static_cast<std::size_t>(wg), 0);
    for (const auto& m : pair.a) {
      const int i = ctx.f.index_of(m);
      if (i < 0) throw std::invalid_argument("maximizer A is not inside F");
      am[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }
    for (const auto& m : pair.b) {
      const int j = ctx.g.index_of(m);
      if (j < 0) throw std::invalid_argument("maximizer B is not inside G");
      bm[static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
    }

    MaximizerClass cls;
    bool star_found = false, swapped_found = false;
    GroundedSet star_w, swapped_w;
    std::uint64_t star_sum = 0;
    for (const auto& p : patterns) {
      if (!star_found && am == p.star_f && bm == p.meets_g) {
        star_found = true;
        star_w = p.witness;
        star_sum = static_cast<std::uint64_t>(
            popcount_words(p.star_f.data(), wf) +
            popcount_words(p.meets_g.data(), wg));
      }
      if (!swapped_found && p.swapped_applicable && am == p.meets_f &&
          bm == p.star_g) {
        swapped_found = true;
        swapped_w = p.witness;
      }
      if (star_found && swapped_found) break;
    }
    if (star_found) {
      cls.shape = PairShape::star_pair;
      cls.witness = star_w;
      cls.star_sum_is_m = star_sum == report.m;
      if (swapped_found) {
        cls.matched_both = true;
        cls.swapped_witness = swapped_w;
      }
    } else if (swapped_found) {
      cls.shape = PairShape::swapped_star_pair;
      cls.witness = swapped_w;
      // With r = s the two levels coincide, so the star orientation of the
      // same witness attains the same sum.
      const std::uint64_t sum = static_cast<std::uint64_t>(
          static_cast<int>(star(ctx.f, swapped_w).size()) +
          static_cast<int>(meets_at_least(ctx.g, swapped_w, ctx.t).size()));
      cls.star_sum_is_m = sum == report.m;
    } else {
      cls.shape = PairShape::unstructured;
    }
    report.classifications.push_back(std::move(cls));
  }
  return report;
}

StarPropertyResult max_t_intersecting(const SetFamily& f, int t, int cap) {
  if (cap > 62) cap = 62;
  if (static_cast<int>(f.size()) > cap) throw cap_error("clique cap");
  const int n = static_cast<int>(f.size());

  // Vertices: members that t-intersect themselves (|A| >= t).
  std::vector<int> verts;
  for (int i = 0; i < n; ++i)
    if (f.at(static_cast<std::size_t>(i)).size() >= t) verts.push_back(i);
  const int m = static_cast<int>(verts.size());
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(std::max(1, m)), 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (intersection_size(f.at(static_cast<std::size_t>(verts[a])),
                            f.at(static_cast<std::size_t>(verts[b]))) >= t) {
        adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
      }

  int best = 0;
  std::uint64_t best_mask = 0;

  // Greedy-colouring bound branch and bound.
  struct Rec {
    const std::vector<std::uint64_t>& adj;
    int& best;
    std::uint64_t& best_mask;
    void run(std::uint64_t r, int rsize, std::uint64_t p) {
      if (p == 0) {
        if (rsize > best) {
          best = rsize;
          best_mask = r;
        }
        return;
      }
      std::vector<std::pair<int, int>> order;  // (vertex, colour)
      std::uint64_t left = p;
      int colour = 0;
      while (left) {
        ++colour;
        std::uint64_t cls = left;
        while (cls) {
          const int v = std::countr_zero(cls);
          order.emplace_back(v, colour);
          left &= ~(std::uint64_t{1} << v);
          cls &= ~(std::uint64_t{1} << v);
          cls &= ~adj[static_cast<std::size_t>(v)];
        }
      }
      std::uint64_t avail = p;
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto [v, c] = *it;
        if (rsize + c <= best) return;
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (!(avail & bit)) continue;
        run(r | bit, rsize + 1, avail & adj[static_cast<std::size_t>(v)]);
        avail &= ~bit;
      }
    }
  } rec{adj, best, best_mask};
  if (m > 0) rec.run(0, 0, (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1));

  StarPropertyResult out;
  out.size = best;
  {
    std::vector<GroundedSet> w;
    for (int a = 0; a < m; ++a)
      if ((best_mask >> a) & 1u)
        w.push_back(f.at(static_cast<std::size_t>(verts[static_cast<std::size_t>(a)])));
    out.witness = SetFamily::canonical(f.ground(), std::move(w));
  }

  // Best t-star: only cores inside some member can be non-empty stars.
  std::vector<GroundedSet> cores;
  for (const auto& mset : f)
    for_each_subset_of_size(mset, t, [&](const GroundedSet& tt) { cores.push_back(tt); });
  std::sort(cores.begin(), cores.end(), canonical_less);
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
  out.best_star_size = 0;
  out.best_star_core = GroundedSet::empty(f.ground());
  for (const auto& tt : cores) {
    const int sz = static_cast<int>(star(f, tt).size());
    if (sz > out.best_star_size) {
      out.best_star_size = sz;
      out.best_star_core = tt;
    }
  }
  out.star_attained = out.best_star_size == out.size;
  return out;
}

}  // namespace hfam
