#include "suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "oracle.hpp"
#include "psg/bounds.hpp"
#include "psg/error.hpp"
#include "psg/growth.hpp"
#include "psg/lox.hpp"
#include "psg/tree.hpp"

namespace psg::suite {

  using oracle::Rng;

  namespace {

    constexpr std::uint64_t short_lox_seed = 0x51a7e10c0ffeeULL;

    /////////////////////////////////////////////////////////////////////
    // Corpora
    /////////////////////////////////////////////////////////////////////

    GroupWord nonidentity_word(Rng& rng, GraphPtr const& g, std::size_t lo,
                               std::size_t hi) {
      for (;;) {
        auto len = rng.between(lo, hi);
        GroupWord w(g, oracle::random_letters(rng, g->num_vertices(), len));
        if (!w.is_identity() && w.length() >= lo) {
          return w;
        }
      }
    }

    GroupWord letter(GraphPtr const& g, std::size_t v, bool inv = false) {
      Letter l(v, inv);
      return GroupWord(g, std::span<Letter const>(&l, 1));
    }

    // Applies the endomorphism x_i -> phi[i] to w.
    GroupWord substitute(GroupWord const& w, std::vector<GroupWord> const& phi) {
      GroupWord out(w.graph_ptr());
      for (auto l : w.letters()) {
        out = out * (l.inverse() ? phi[l.vertex()].inverse() : phi[l.vertex()]);
      }
      return out;
    }

    // Elementary automorphisms of A(P4), P4 = a - b - c - d.
    std::vector<GroupWord> p4_move(GraphPtr const& g, std::size_t which,
                                   std::size_t invert_vertex) {
      std::vector<GroupWord> phi;
      for (std::size_t v = 0; v < 4; ++v) {
        phi.push_back(letter(g, v));
      }
      auto a = letter(g, 0), b = letter(g, 1), c = letter(g, 2),
           d = letter(g, 3);
      switch (which) {
        case 0: phi[0] = a * b; break;
        case 1: phi[0] = a * c; break;
        case 2: phi[0] = b * a; break;
        case 3: phi[0] = c * a; break;
        case 4: phi[3] = d * b; break;
        case 5: phi[3] = d * c; break;
        case 6: phi[3] = b * d; break;
        case 7: phi[3] = c * d; break;
        case 8: phi[3] = b * d * b.inverse(); break;
        case 9: phi[0] = c * a * c.inverse(); break;
        default: phi[invert_vertex] = phi[invert_vertex].inverse(); break;
      }
      return phi;
    }

    std::string join_words(std::vector<std::string> const& v) {
      std::string out;
      for (auto const& s : v) {
        out += (out.empty() ? "" : ", ") + s;
      }
      return out;
    }

    /////////////////////////////////////////////////////////////////////
    // Criteria
    /////////////////////////////////////////////////////////////////////

    struct Context {
      std::uint64_t            seed;
      std::vector<GrowthTable> safin_tables;
      double                   safin_seconds = 0;
    };

    using Clock = std::chrono::steady_clock;

    double since(Clock::time_point t0) {
      return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    void ensure_safin_tables(Context& ctx) {
      if (!ctx.safin_tables.empty()) {
        return;
      }
      auto t0 = Clock::now();
      for (auto const& u : safin_corpus(ctx.seed, 300)) {
        ctx.safin_tables.push_back(growth_table(u, 5, false));
      }
      ctx.safin_seconds = since(t0);
    }

    GrowthParams safin_params() {
      return {Rational(1, 372), Rational(1), ExponentMode::half_floor};
    }

    CriterionResult c1(Context& ctx) {
      ensure_safin_tables(ctx);
      std::size_t violations = 0;
      for (auto const& t : ctx.safin_tables) {
        for (auto const& v : check_inequality(t, safin_params())) {
          violations += v.holds ? 0 : 1;
        }
      }
      bool fast = ctx.safin_seconds < 60;
      std::ostringstream os;
      os << ctx.safin_tables.size() << " sets, n <= 5, " << violations
         << " violations" << (fast ? "" : ", over the 60 s budget");
      return {1, "safin-suite", violations == 0 && fast, os.str()};
    }

    CriterionResult c2(Context&) {
      auto t0 = Clock::now();
      auto g  = oracle::edgeless_graph(2);
      std::vector<GroupWord> words;
      for (unsigned m = 0; m < 512; ++m) {
        Letters w;
        for (unsigned i = 0; i < 9; ++i) {
          w.emplace_back((m >> i) & 1U, false);
        }
        words.emplace_back(g, w);
      }
      WordSet u(g, std::move(words));
      auto    t  = growth_table(u, 2, false);
      auto    vs = check_inequality(t, safin_params());
      bool    ok = u.size() == 512 && t.sizes[1] == 262144 && vs[0].holds
                && vs[1].holds && since(t0) < 30;
      std::ostringstream os;
      os << "|U| = " << u.size() << ", |U^2| = " << t.sizes[1]
         << ", verdict " << (vs[1].holds ? "true" : "false");
      return {2, "block-injectivity", ok, os.str()};
    }

    CriterionResult c3(Context&) {
      auto        t0            = Clock::now();
      std::size_t graphs        = 0;
      std::size_t subsets       = 0;
      std::size_t disagreements = 0;
      for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<DefiningGraph::Edge> pairs;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
          }
        }
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << pairs.size()); ++m) {
          std::vector<DefiningGraph::Edge> e;
          for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((m >> i) & 1U) {
              e.push_back(pairs[i]);
            }
          }
          DefiningGraph g(oracle::letter_names(n), e);
          if (connected_components(g).size() != 1) {
            continue;
          }
          ++graphs;
          auto joins = enumerate_subjoins(g);
          for (std::uint64_t s = 1; s < (std::uint64_t(1) << n); ++s) {
            VertexSet set(s);
            bool fast = support_in_subjoin(g, set, SubjoinMode::fast).in_subjoin;
            bool slow = false;
            for (auto j : joins) {
              slow = slow || set.subset_of(j);
            }
            ++subsets;
            disagreements += fast != slow ? 1 : 0;
          }
        }
      }
      bool ok = disagreements == 0 && since(t0) < 300;
      std::ostringstream os;
      os << graphs << " labelled connected graphs, " << subsets
         << " subsets, " << disagreements << " disagreements";
      return {3, "subjoin-criterion", ok, os.str()};
    }

    CriterionResult c4(Context& ctx) {
      auto        t0 = Clock::now();
      Rng         rng(ctx.seed ^ 0x4a4a4a4aULL);
      std::size_t words = 0, disagreements = 0, split = 0;
      for (std::size_t gi = 0; gi < 20; ++gi) {
        auto g = oracle::random_graph(rng, rng.between(1, 5), 1, 2);
        for (std::size_t i = 0; i < 500; ++i) {
          auto raw = oracle::random_letters(rng, g->num_vertices(),
                                            rng.between(0, 8));
          auto nf  = word_ops::normal_form(raw, *g);
          auto ref = oracle::rewrite_normal_form(raw, *g);
          ++words;
          disagreements += nf != ref.least ? 1 : 0;
          split += ref.single_class ? 0 : 1;
        }
      }
      bool ok = disagreements == 0 && split == 0 && since(t0) < 300;
      std::ostringstream os;
      os << words << " words over 20 graphs, " << disagreements
         << " disagreements, " << split << " split fixpoint classes";
      return {4, "normal-form-oracle", ok, os.str()};
    }

    CriterionResult c5(Context& ctx) {
      ensure_safin_tables(ctx);
      std::size_t fails = 0;
      for (auto const& t : ctx.safin_tables) {
        fails += tripling_check(t).holds ? 0 : 1;
      }
      std::ostringstream os;
      os << ctx.safin_tables.size() << " sets, " << fails << " failures";
      return {5, "small-tripling", fails == 0, os.str()};
    }

    CriterionResult c6(Context& ctx) {
      std::size_t violations = 0, wrong_factors = 0;
      auto        corpus     = projection_corpus(ctx.seed, 300);
      for (auto const& u : corpus) {
        auto rep = projection_analysis(u);
        if (rep.factors.size() != 2
            || rep.factors[0] != VertexSet::from_indices({0, 2})) {
          ++wrong_factors;
        }
        // max^2 >= |U| with exact integers.
        bool holds = rep.max_size * rep.max_size >= u.size();
        violations += holds && rep.holds ? 0 : 1;
      }
      std::ostringstream os;
      os << corpus.size() << " sets in A(C4), " << violations
         << " violations";
      return {6, "large-projection", violations == 0 && wrong_factors == 0,
              os.str()};
    }

    CriterionResult c7(Context&) {
      auto t0 = Clock::now();
      std::ostringstream os;
      bool ok = true;

      auto r1 = counterexample_search({1, 1, ExponentMode::linear}, 10, 4);
      if (!r1.set || r1.k != 10 || r1.n != 2 || r1.set->size() != 105
          || r1.sizes.size() != 2 || r1.sizes[1] != 697
          || !(697 < 105 * 105)) {
        ok = false;
        os << "(1,1): unexpected result " << r1.diagnostic << "; ";
      } else {
        auto fresh = product_set(*r1.set, 2, {5'000'000, 64});
        ok         = ok && fresh.size() == 697
             && oracle::counterexample_size(10, 2) == 697;
        os << "(1,1): U_10, |U| = 105, |U^2| = " << fresh.size()
           << " < 11025; ";
      }

      GrowthParams half{Rational(1, 2), Rational(1, 2), ExponentMode::linear};
      auto r2 = counterexample_search(half, 64, 4);
      if (!r2.set || r2.k > 64 || r2.n > 4) {
        ok = false;
        os << "(1/2,1/2): none found " << r2.diagnostic;
      } else {
        auto expect = oracle::counterexample_size(r2.k, r2.n);
        ok = ok && r2.sizes.back() == expect
             && r2.set->size() == oracle::counterexample_size(r2.k, 1)
             && !growth_holds(r2.sizes.back(), r2.set->size(), half, r2.n);
        os << "(1/2,1/2): k = " << r2.k << ", n = " << r2.n << ", |U^n| = "
           << r2.sizes.back() << " < " << format_double(std::floor(r2.rhs));
      }
      ok = ok && since(t0) < 120;
      return {7, "counterexample", ok, os.str()};
    }

    CriterionResult c8(Context& ctx) {
      Rng         rng(ctx.seed ^ 0x8888ULL);
      std::size_t fails = 0;
      for (std::size_t i = 0; i < 100; ++i) {
        auto g = oracle::edgeless_graph(rng.between(2, 3));
        auto w = oracle::random_word(rng, g, 8);
        auto t = stable_translation_length(w);
        bool ok = t.tau == oracle::translation_length(oracle::to_free_string(w))
                  && t.converged && (w.is_identity() || t.tau >= 1);
        fails += ok ? 0 : 1;
      }
      std::ostringstream os;
      os << "100 words, " << fails << " failures";
      return {8, "translation-length", fails == 0, os.str()};
    }

    CriterionResult c9(Context& ctx) {
      ActionConstants c;
      c.r      = 4;
      c.k_disp = 40;
      std::size_t fails  = 0;
      auto        corpus = partition_corpus(ctx.seed, 100);
      std::string first;
      for (auto const& u : corpus) {
        try {
          auto rep = reduction_partition(u, c);
          auto bad = verify_partition(u, rep, c);
          if (!bad.empty()) {
            ++fails;
            if (first.empty()) {
              first = bad.front();
            }
          }
        } catch (Error const& e) {
          ++fails;
          if (first.empty()) {
            first = e.what();
          }
        }
      }
      std::ostringstream os;
      os << corpus.size() << " configurations, " << fails << " failures";
      if (!first.empty()) {
        os << " (first: " << first << ")";
      }
      return {9, "reduction-partition", fails == 0, os.str()};
    }

    CriterionResult c10(Context&) {
      std::size_t found = 0, max_n = 0;
      auto        corpus = short_lox_corpus();
      for (auto const& u : corpus) {
        auto r = short_loxodromic(u, 4);
        if (r.status == ShortLoxResult::Status::found && r.n <= 4
            && is_loxodromic(*r.witness).status == LoxStatus::loxodromic) {
          ++found;
          max_n = std::max(max_n, r.n);
        }
      }
      auto p3  = p3_graph();
      auto gen = symmetric_closure(
          WordSet(p3, {letter(p3, 0), letter(p3, 1), letter(p3, 2)}));
      auto na  = short_loxodromic(gen, 4);
      bool ok  = found == corpus.size() && corpus.size() == 50
                && na.status == ShortLoxResult::Status::not_applicable;
      std::ostringstream os;
      os << found << "/" << corpus.size() << " sets with a witness, max n = "
         << max_n << "; A(P3) generators: "
         << (na.status == ShortLoxResult::Status::not_applicable
                 ? "not_applicable"
                 : "applicable");
      return {10, "short-loxodromic", ok, os.str()};
    }

    CriterionResult c11(Context&) {
      auto r = [](Rational const& q) { return q; };
      std::vector<std::string> bad;
      auto check = [&](std::string const& tag,
                       std::map<std::string, Rational> in,
                       std::vector<std::pair<std::string, Rational>> expect) {
        auto res = bound_calculator(tag, in);
        for (auto const& [name, value] : expect) {
          auto const& v = res.at(name);
          if (!v.exact || *v.exact != value) {
            bad.push_back(tag + "." + name);
          }
        }
      };
      check("kchoice", {{"delta", 1}, {"kappa0", 1}, {"n0", 1}},
            {{"alpha", Rational(BigInt(1), pow10(52))},
             {"K", r(Rational(pow10(14)))}});
      check("supergroup", {{"alpha", 1}, {"beta", 1}, {"d", 1}},
            {{"m", 3}, {"alpha", Rational(1, 8)}, {"beta", Rational(1, 3)}});
      check("factors", {{"alpha", Rational(1, 2)}, {"beta", 1}, {"m", 2}},
            {{"alpha", Rational(1, 4)}, {"beta", Rational(1, 2)}});
      check("approx_bound", {{"k", 1}, {"alpha", 1}, {"beta", 2}},
            {{"size_bound", 1}});
      std::string detail = bad.empty() ? "kchoice, supergroup, factors, "
                                         "approx_bound exact"
                                       : "mismatch: " + join_words(bad);
      return {11, "constants", bad.empty(), detail};
    }

  }  // namespace

  std::vector<WordSet> safin_corpus(std::uint64_t seed, std::size_t count) {
    Rng rng(seed ^ 0x5af1ULL);
    std::vector<WordSet> out;
    while (out.size() < count) {
      auto g = oracle::edgeless_graph(rng.between(2, 3));
      std::vector<GroupWord> gens;
      auto m = rng.between(1, 6);
      for (std::size_t i = 0; i < m; ++i) {
        gens.push_back(nonidentity_word(rng, g, 1, 3));
      }
      auto u = symmetric_closure(WordSet(g, std::move(gens)));
      if (u.size() > 12 || cyclic_check(u).cyclic) {
        continue;
      }
      out.push_back(std::move(u));
    }
    return out;
  }

  std::vector<WordSet> projection_corpus(std::uint64_t seed, std::size_t count) {
    Rng  rng(seed ^ 0xc4c4ULL);
    auto g = oracle::cycle_graph(4);
    std::vector<WordSet> out;
    while (out.size() < count) {
      std::vector<GroupWord> ws;
      auto m = rng.between(1, 12);
      for (std::size_t i = 0; i < m; ++i) {
        ws.push_back(oracle::random_word(rng, g, 5));
      }
      out.emplace_back(g, std::move(ws));
    }
    return out;
  }

  std::vector<WordSet> partition_corpus(std::uint64_t seed, std::size_t count) {
    Rng  rng(seed ^ 0x9a9aULL);
    auto g = oracle::edgeless_graph(2);
    ActionConstants c;
    c.r      = 4;
    c.k_disp = 40;
    std::vector<WordSet> out;
    while (out.size() < count) {
      std::vector<GroupWord> ws;
      auto m    = rng.between(8, 30);
      auto kind = rng.below(3);
      for (std::size_t i = 0; i < m; ++i) {
        if (kind == 0 || (kind == 2 && rng.coin())) {
          // a^{±45} followed by a short tail.
          bool    neg = rng.coin();
          Letters w(45, Letter(0, neg));
          auto tail = oracle::random_letters(rng, 2, rng.between(0, 3));
          w.insert(w.end(), tail.begin(), tail.end());
          ws.emplace_back(g, w);
        } else if (kind == 2 && rng.chance(1, 5)) {
          ws.push_back(oracle::random_word(rng, g, 6));
        } else {
          ws.push_back(nonidentity_word(rng, g, 44, 60));
        }
      }
      WordSet u(g, std::move(ws));
      auto    e   = energy_basepoint(u);
      auto    x0i = e.basepoint.inverse();
      std::size_t far = 0;
      for (auto const& x : u) {
        far += (x0i * x * e.basepoint).length() >= c.k_disp ? 1 : 0;
      }
      if (4 * far >= 3 * u.size()) {
        out.push_back(std::move(u));
      }
    }
    return out;
  }

  std::vector<WordSet> short_lox_corpus() {
    Rng  rng(short_lox_seed);
    auto g = oracle::path_graph(4);
    std::vector<WordSet> out;
    while (out.size() < 50) {
      std::vector<GroupWord> img;
      for (std::size_t v = 0; v < 4; ++v) {
        img.push_back(letter(g, v));
      }
      auto moves = rng.between(1, 3);
      for (std::size_t i = 0; i < moves; ++i) {
        auto phi = p4_move(g, rng.below(11), rng.below(4));
        for (auto& w : img) {
          w = substitute(w, phi);
        }
      }
      if (rng.chance(1, 3)) {
        img.push_back(nonidentity_word(rng, g, 1, 3));
      }
      bool too_long = false;
      for (auto const& w : img) {
        too_long = too_long || w.length() > 8;
      }
      if (too_long) {
        continue;
      }
      auto u = symmetric_closure(WordSet(g, std::move(img)));
      if (direct_product_obstruction(u) || cyclic_check(u).cyclic) {
        continue;
      }
      out.push_back(std::move(u));
    }
    return out;
  }

  std::vector<int> const& criterion_ids() {
    static std::vector<int> const ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    return ids;
  }

  std::vector<CriterionResult> run(std::uint64_t seed,
                                   std::vector<int> const& ids) {
    static std::map<int, std::function<CriterionResult(Context&)>> const table =
        {{1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5}, {6, c6},
         {7, c7}, {8, c8}, {9, c9}, {10, c10}, {11, c11}};
    Context                      ctx{seed, {}, 0};
    std::vector<CriterionResult> out;
    for (int id : ids) {
      auto it = table.find(id);
      if (it == table.end()) {
        throw DomainError("no criterion " + std::to_string(id));
      }
      auto t0 = Clock::now();
      CriterionResult r;
      try {
        r = it->second(ctx);
      } catch (std::exception const& e) {
        r = {id, "error", false, e.what()};
      }
      r.seconds = since(t0);
      out.push_back(std::move(r));
    }
    return out;
  }

  std::string format_line(CriterionResult const& r) {
    return std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id)
           + " " + r.name + ": " + r.detail;
  }

}  // namespace psg::suite
