#include "psg/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <unordered_set>

#include "psg/error.hpp"

namespace psg {

  namespace {

    using LevelSet = std::unordered_set<Letters, LettersHash>;

    constexpr double log_tolerance = 1e-9;

    void check_length(WordSet const& u, std::size_t n,
                      EnumerationCaps const& caps) {
      if (n * u.max_length() > caps.max_length) {
        throw CapExceeded("product length " + std::to_string(n) + " x "
                          + std::to_string(u.max_length())
                          + " exceeds the length cap "
                          + std::to_string(caps.max_length));
      }
    }

    void check_elements(std::size_t size, EnumerationCaps const& caps) {
      if (size > caps.max_elements) {
        throw CapExceeded("product set exceeds the element cap "
                          + std::to_string(caps.max_elements));
      }
    }

    void extend_range(std::vector<Letters> const& prev,
                      std::size_t                 begin,
                      std::size_t                 end,
                      std::vector<Letters> const& gens,
                      DefiningGraph const&        g,
                      EnumerationCaps const&      caps,
                      std::size_t                 stop_at,
                      LevelSet&                   out) {
      Letters buf;
      for (std::size_t i = begin; i < end; ++i) {
        for (auto const& s : gens) {
          word_ops::multiply_into(prev[i], s, g, buf);
          if (out.find(buf) == out.end()) {
            out.insert(buf);
            check_elements(out.size(), caps);
            if (out.size() >= stop_at) {
              return;
            }
          }
        }
      }
    }

    // prev · gens.  With stop_at set, enumeration may end as soon as the
    // level holds that many elements.
    LevelSet extend(std::vector<Letters> const& prev,
                    std::vector<Letters> const& gens,
                    DefiningGraph const&        g,
                    EnumerationCaps const&      caps,
                    std::size_t stop_at = std::numeric_limits<std::size_t>::max()) {
      auto threads = std::min(enumeration_threads(), prev.size());
      LevelSet out;
      if (threads <= 1 || prev.size() * gens.size() < 4096) {
        extend_range(prev, 0, prev.size(), gens, g, caps, stop_at, out);
        return out;
      }
      std::vector<LevelSet>    parts(threads);
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(threads);
      auto chunk = (prev.size() + threads - 1) / threads;
      for (std::size_t t = 0; t < threads; ++t) {
        auto b = std::min(prev.size(), t * chunk);
        auto e = std::min(prev.size(), b + chunk);
        pool.emplace_back([&, t, b, e] {
          try {
            extend_range(prev, b, e, gens, g, caps, stop_at, parts[t]);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
      for (auto& err : errors) {
        if (err) {
          std::rethrow_exception(err);
        }
      }
      out = std::move(parts[0]);
      for (std::size_t t = 1; t < threads; ++t) {
        out.merge(parts[t]);
        check_elements(out.size(), caps);
      }
      return out;
    }

    std::vector<Letters> drain(LevelSet& s) {
      std::vector<Letters> out;
      out.reserve(s.size());
      while (!s.empty()) {
        out.push_back(std::move(s.extract(s.begin()).value()));
      }
      return out;
    }

    std::vector<Letters> letters_of(WordSet const& u) {
      std::vector<Letters> out;
      out.reserve(u.size());
      for (auto const& e : u) {
        out.push_back(e.letters());
      }
      return out;
    }

    WordSet to_word_set(GraphPtr const& g, std::vector<Letters> level) {
      std::vector<GroupWord> words;
      words.reserve(level.size());
      for (auto& w : level) {
        words.push_back(GroupWord::from_canonical(g, std::move(w)));
      }
      return WordSet(g, std::move(words));
    }

    // Smallest size for which the inequality holds, or max when that is
    // beyond any enumerable size.
    std::size_t holding_threshold(std::size_t base, GrowthParams const& p,
                                  std::size_t n) {
      auto const log_rhs =
          exponent(p, n) * std::log(to_double(p.alpha * base));
      if (log_rhs > 60.0) {
        return std::numeric_limits<std::size_t>::max();
      }
      auto t = static_cast<std::size_t>(std::ceil(std::exp(log_rhs)));
      t      = std::max<std::size_t>(t, 1);
      while (t > 1 && growth_holds(t - 1, base, p, n)) {
        --t;
      }
      while (!growth_holds(t, base, p, n)) {
        ++t;
      }
      return t;
    }

  }  // namespace

  std::size_t enumeration_threads() {
    std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
    if (char const* env = std::getenv("PSG_THREADS")) {
      char* end = nullptr;
      auto  v   = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1) {
        return std::min<std::size_t>(v, 256);
      }
    }
    return hw;
  }

  WordSet product_set(WordSet const& u, std::size_t n,
                      EnumerationCaps const& caps) {
    if (n == 0) {
      throw DomainError("product set exponent must be positive");
    }
    check_length(u, n, caps);
    check_elements(u.size(), caps);
    auto const gens  = letters_of(u);
    auto       level = gens;
    for (std::size_t i = 2; i <= n; ++i) {
      auto next = extend(level, gens, u.graph(), caps);
      level     = drain(next);
    }
    return to_word_set(u.graph_ptr(), std::move(level));
  }

  GrowthTable growth_table(WordSet const& u, std::size_t n_max,
                           bool with_balls, EnumerationCaps const& caps) {
    if (n_max == 0) {
      throw DomainError("n_max must be positive");
    }
    check_length(u, n_max, caps);
    check_elements(u.size(), caps);
    GrowthTable t;
    t.base_size = u.size();

    auto const gens  = letters_of(u);
    auto       level = gens;
    LevelSet   ball;
    if (with_balls) {
      ball.insert(Letters{});
      t.ball_sizes.emplace();
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (n > 1) {
        auto next = extend(level, gens, u.graph(), caps);
        level     = drain(next);
      }
      t.sizes.push_back(level.size());
      if (with_balls) {
        ball.insert(level.begin(), level.end());
        check_elements(ball.size(), caps);
        t.ball_sizes->push_back(ball.size());
        t.ball_root.push_back(
            std::pow(static_cast<double>(ball.size()), 1.0 / double(n)));
      }
    }
    return t;
  }

  void GrowthParams::validate() const {
    if (alpha <= 0 || beta <= 0) {
      throw DomainError("alpha and beta must be positive");
    }
  }

  double exponent(GrowthParams const& p, std::size_t n) {
    if (p.mode == ExponentMode::half_floor) {
      return static_cast<double>((n + 1) / 2);
    }
    return to_double(p.beta) * static_cast<double>(n);
  }

  bool growth_holds(std::size_t size, std::size_t base_size,
                    GrowthParams const& p, std::size_t n) {
    if (p.alpha * base_size <= 1) {
      return true;
    }
    if (size == 0) {
      return false;
    }
    auto const lhs = std::log(static_cast<double>(size));
    auto const rhs = exponent(p, n) * std::log(to_double(p.alpha * base_size));
    return lhs >= rhs - log_tolerance * std::abs(rhs);
  }

  std::vector<Verdict> check_inequality(GrowthTable const& t,
                                        GrowthParams const& p) {
    p.validate();
    std::vector<Verdict> out;
    auto const base = to_double(p.alpha * t.base_size);
    for (std::size_t i = 0; i < t.sizes.size(); ++i) {
      auto n = i + 1;
      out.push_back({n, t.sizes[i], std::pow(base, exponent(p, n)),
                     growth_holds(t.sizes[i], t.base_size, p, n)});
    }
    return out;
  }

  TriplingReport tripling_check(GrowthTable const& t) {
    if (t.sizes.size() < 3) {
      throw DomainError("tripling check needs |U^n| up to n = 3");
    }
    if (t.base_size == 0) {
      throw DomainError("tripling check on the empty set");
    }
    TriplingReport rep;
    rep.k = Rational(t.sizes[2], t.base_size);
    Rational const step = 8 * rep.k * rep.k * rep.k;
    auto const ln_step  = std::log(8.0) + 3.0 * std::log(to_double(rep.k));
    auto const ln_base  = std::log(static_cast<double>(t.base_size));
    Rational   bound    = t.base_size * step;
    for (std::size_t n = 3; n <= t.sizes.size(); ++n) {
      auto const size   = t.sizes[n - 1];
      auto const ln_b   = double(n - 2) * ln_step + ln_base;
      bool const holds  = Rational(size) <= bound;
      auto const margin = ln_b - std::log(double(size));
      rep.rows.push_back({n, size, to_double(bound), margin, holds});
      rep.holds = rep.holds && holds;
      bound *= step;
    }
    return rep;
  }

  bool approx_witness_check(WordSet const& u, WordSet const& x,
                            EnumerationCaps const& caps) {
    if (!same_graph(u.graph(), x.graph())) {
      throw DomainError("sets belong to different graphs");
    }
    if (!u.symmetric()) {
      throw DomainError("approximate group check needs a symmetric set");
    }
    auto const u2 = product_set(u, 2, caps);
    LevelSet   xu;
    Letters    buf;
    for (auto const& a : x) {
      for (auto const& b : u) {
        word_ops::multiply_into(a.letters(), b.letters(), u.graph(), buf);
        xu.insert(buf);
      }
    }
    return std::all_of(u2.begin(), u2.end(), [&](GroupWord const& w) {
      return xu.count(w.letters()) != 0;
    });
  }

  GroupWord project(GroupWord const& w, VertexSet factor) {
    Letters kept;
    for (auto l : w.letters()) {
      if (factor.contains(l.vertex())) {
        kept.push_back(l);
      }
    }
    return GroupWord(w.graph_ptr(), kept);
  }

  ProjectionReport projection_analysis(WordSet const& u) {
    auto const& g = u.graph();
    ProjectionReport rep;
    rep.factors = join_decomposition(g, g.vertices());
    if (rep.factors.size() < 2) {
      throw NotAProduct("the defining graph is not a join");
    }
    for (auto f : rep.factors) {
      std::vector<GroupWord> proj;
      for (auto const& e : u) {
        proj.push_back(project(e, f));
      }
      rep.projections.emplace_back(u.graph_ptr(), std::move(proj));
      rep.max_size = std::max(rep.max_size, rep.projections.back().size());
    }
    // max^m >= |U|, saturating.
    std::size_t power = 1;
    for (std::size_t i = 0; i < rep.factors.size() && power < u.size(); ++i) {
      if (rep.max_size != 0
          && power > std::numeric_limits<std::size_t>::max() / rep.max_size) {
        power = std::numeric_limits<std::size_t>::max();
      } else {
        power *= rep.max_size;
      }
    }
    rep.holds = power >= u.size();
    return rep;
  }

  GraphPtr p3_graph() {
    static GraphPtr const g = std::make_shared<DefiningGraph const>(
        std::vector<std::string>{"a", "b", "c"},
        std::vector<DefiningGraph::Edge>{{0, 2}, {1, 2}});
    return g;
  }

  WordSet counterexample_family(std::size_t k) {
    auto const g = p3_graph();
    std::vector<Letters> heads = {
        {}, {Letter(0, false)}, {Letter(0, true)}, {Letter(1, false)},
        {Letter(1, true)}};
    std::vector<GroupWord> out;
    for (auto const& h : heads) {
      for (long i = -static_cast<long>(k); i <= static_cast<long>(k); ++i) {
        Letters w = h;
        for (long j = 0; j < std::abs(i); ++j) {
          w.emplace_back(2, i < 0);
        }
        out.emplace_back(g, w);
      }
    }
    return WordSet(g, std::move(out));
  }

  CounterexampleResult counterexample_search(GrowthParams const& p,
                                             std::size_t k_max,
                                             std::size_t n_max,
                                             std::size_t k_min,
                                             EnumerationCaps caps) {
    p.validate();
    if (n_max == 0 || k_min > k_max) {
      throw DomainError("counterexample search needs n_max >= 1 and "
                        "k_min <= k_max");
    }
    caps.max_length = std::max(caps.max_length, n_max * (k_max + 1));

    CounterexampleResult res;
    std::string          skipped;
    for (std::size_t k = k_max + 1; k-- > k_min;) {
      auto const u    = counterexample_family(k);
      auto const base = u.size();
      if (p.alpha * base <= 1) {
        continue;
      }
      try {
        auto const gens  = letters_of(u);
        auto       level = gens;
        std::vector<std::size_t> sizes;
        for (std::size_t n = 1; n <= n_max; ++n) {
          if (n > 1) {
            auto stop = n == n_max ? holding_threshold(base, p, n)
                                   : std::numeric_limits<std::size_t>::max();
            auto next = extend(level, gens, u.graph(), caps, stop);
            level     = drain(next);
          }
          sizes.push_back(level.size());
          if (!growth_holds(level.size(), base, p, n)) {
            res.set   = u;
            res.k     = k;
            res.n     = n;
            res.sizes = std::move(sizes);
            res.rhs   = std::pow(to_double(p.alpha * base), exponent(p, n));
            return res;
          }
        }
      } catch (CapExceeded const& e) {
        skipped += " k=" + std::to_string(k) + " (" + e.what() + ")";
      }
    }
    res.diagnostic = "no violation for k in [" + std::to_string(k_min) + ", "
                     + std::to_string(k_max) + "], n <= "
                     + std::to_string(n_max);
    if (!skipped.empty()) {
      res.diagnostic += "; caps exceeded at" + skipped;
    }
    return res;
  }

}  // namespace psg
