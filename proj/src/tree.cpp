#include "psg/tree.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "psg/error.hpp"

namespace psg {

  namespace {
    void require_free(DefiningGraph const& g) {
      if (!g.edgeless()) {
        throw DomainError("tree actions need a free group (edgeless graph)");
      }
    }

    // |x^-1 u x|
    std::size_t moved_by(GroupWord const& u, TreeVertex const& x) {
      return (x.inverse() * u * x).length();
    }

    GroupWord prefix(GroupWord const& w, std::size_t len) {
      Letters l(w.letters().begin(),
                w.letters().begin() + static_cast<std::ptrdiff_t>(len));
      return GroupWord::from_canonical(w.graph_ptr(), std::move(l));
    }
  }  // namespace

  std::string HalfInteger::to_string() const {
    auto whole = twice / 2;
    if (twice % 2 == 0) {
      return std::to_string(whole);
    }
    if (twice < 0) {
      return "-" + std::to_string(-twice / 2) + ".5";
    }
    return std::to_string(whole) + ".5";
  }

  std::size_t distance(TreeVertex const& x, TreeVertex const& y) {
    require_free(x.graph());
    return (x.inverse() * y).length();
  }

  HalfInteger gromov_product(TreeVertex const& x, TreeVertex const& y,
                             TreeVertex const& base) {
    auto s = distance(base, x) + distance(base, y);
    return {static_cast<long>(s) - static_cast<long>(distance(x, y))};
  }

  EnergyReport energy_basepoint(WordSet const& u) {
    if (u.empty()) {
      throw DomainError("energy of an empty set");
    }
    require_free(u.graph());
    std::set<GroupWord> hull;
    for (auto const& e : u) {
      for (auto const& w : {e, e.inverse()}) {
        for (std::size_t i = 0; i <= w.length(); ++i) {
          hull.insert(prefix(w, i));
        }
      }
    }
    std::optional<GroupWord> best;
    std::size_t              best_sum = 0;
    for (auto const& x : hull) {
      std::size_t sum = 0;
      for (auto const& e : u) {
        sum += moved_by(e, x);
        if (best && sum >= best_sum) {
          break;
        }
      }
      if (!best || sum < best_sum) {
        best     = x;
        best_sum = sum;
      }
    }
    std::size_t lambda = 0;
    for (auto const& e : u) {
      lambda = std::max(lambda, moved_by(e, *best));
    }
    return {*best, Rational(best_sum, u.size()), lambda};
  }

  std::size_t displacement(WordSet const& u) {
    return energy_basepoint(u).displacement;
  }

  TranslationLength stable_translation_length(GroupWord const& g) {
    require_free(g.graph());
    TranslationLength t;
    t.tau         = cyclic_reduce(g).core.length();
    t.ratio_at_50 = static_cast<double>(power(g, 50).length()) / 50.0;
    t.converged   = std::abs(t.ratio_at_50 - static_cast<double>(t.tau))
                  <= 2.0 * static_cast<double>(g.length()) / 50.0 + 1e-12;
    return t;
  }

  void ActionConstants::validate() const {
    if (kappa0 < Rational(delta)) {
      throw DomainError("kappa0 must be at least delta");
    }
    if (n0 < 1) {
      throw DomainError("n0 must be at least 1");
    }
    if (r < 1) {
      throw DomainError("sphere radius must be at least 1");
    }
    if (k_disp < 10 * r) {
      throw DomainError("k_disp must be at least 10 r");
    }
  }

  namespace {

    struct Crossing {
      GroupWord   element;
      std::size_t disp;
      std::size_t p, q;  // sphere point indices for u and u^-1
    };

    // Lower median.
    std::size_t median(std::vector<std::size_t> v) {
      std::sort(v.begin(), v.end());
      return v[(v.size() - 1) / 2];
    }

    HalfInteger max_cross(std::vector<GroupWord> const& a, bool invert_a,
                          std::vector<GroupWord> const& b, bool invert_b,
                          TreeVertex const& x0) {
      HalfInteger best{0};
      for (auto const& s : a) {
        auto sx = (invert_a ? s.inverse() : s) * x0;
        for (auto const& t : b) {
          auto tx = (invert_b ? t.inverse() : t) * x0;
          best    = std::max(best, gromov_product(sx, tx, x0));
        }
      }
      return best;
    }

  }  // namespace

  PartitionReport reduction_partition(WordSet const& u,
                                      ActionConstants const& c) {
    c.validate();
    require_free(u.graph());
    auto energy   = energy_basepoint(u);
    auto const x0 = energy.basepoint;
    auto const x0i = x0.inverse();

    std::vector<Crossing>    far;
    std::vector<GroupWord>   points;
    std::vector<std::pair<GroupWord, GroupWord>> raw;
    for (auto const& e : u) {
      auto w = x0i * e * x0;
      if (w.length() < c.k_disp) {
        continue;
      }
      far.push_back({e, w.length(), 0, 0});
      raw.emplace_back(x0 * prefix(w, c.r), x0 * prefix(w.inverse(), c.r));
    }
    if (4 * far.size() < 3 * u.size()) {
      throw PreconditionError(
          std::to_string(u.size() - far.size()) + " of "
          + std::to_string(u.size()) + " elements have displacement below "
          + std::to_string(c.k_disp) + " (at most a quarter allowed)");
    }
    for (auto const& [p, q] : raw) {
      points.push_back(p);
      points.push_back(q);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto index = [&](GroupWord const& x) {
      return static_cast<std::size_t>(
          std::lower_bound(points.begin(), points.end(), x) - points.begin());
    };
    for (std::size_t i = 0; i < far.size(); ++i) {
      far[i].p = index(raw[i].first);
      far[i].q = index(raw[i].second);
    }

    // Sweep: points [0, n) have moved from P to Q.
    auto const total = u.size();
    std::vector<GroupWord> u0p, u1p;
    std::string            stage;
    std::size_t            step = 0;
    for (std::size_t n = 1; n <= points.size() && stage.empty(); ++n) {
      std::vector<GroupWord> pq, qp, pp, qq;
      for (auto const& f : far) {
        bool p_in_q = f.p < n;
        bool q_in_q = f.q < n;
        (p_in_q ? (q_in_q ? qq : qp) : (q_in_q ? pq : pp)).push_back(f.element);
      }
      if (100 * pq.size() > total) {
        u0p = u1p = pq;
        stage     = "U_{P,Q}";
      } else if (100 * qp.size() > total) {
        u0p = u1p = qp;
        stage     = "U_{Q,P}";
      } else if (100 * qq.size() > total) {
        u0p   = pp;
        u1p   = qq;
        stage = "U_{P,P}/U_{Q,Q}";
      }
      step = n;
    }

    auto disp_of = [&](GroupWord const& e) { return moved_by(e, x0); };
    std::vector<GroupWord> u0, u1;
    if (!u0p.empty() && !u1p.empty()) {
      std::vector<std::size_t> d0, d1;
      for (auto const& e : u0p) {
        d0.push_back(disp_of(e));
      }
      for (auto const& e : u1p) {
        d1.push_back(disp_of(e));
      }
      auto m0 = median(d0);
      auto m1 = median(d1);
      auto const& lo_set = m0 <= m1 ? u0p : u1p;
      auto const& hi_set = m0 <= m1 ? u1p : u0p;
      auto const  lo_m   = std::min(m0, m1);
      auto const  hi_m   = std::max(m0, m1);
      for (auto const& e : lo_set) {
        if (disp_of(e) <= lo_m) {
          u0.push_back(e);
        }
      }
      for (auto const& e : hi_set) {
        if (disp_of(e) >= hi_m) {
          u1.push_back(e);
        }
      }
    }

    PartitionReport rep{.energy = std::move(energy),
                        .u0     = WordSet(u.graph_ptr(), u0),
                        .u1     = WordSet(u.graph_ptr(), u1)};
    rep.cross_inv0_1 = max_cross(u0, true, u1, false, x0);
    rep.cross_0_inv1 = max_cross(u0, false, u1, true, x0);
    std::size_t md   = 0;
    bool        any  = false;
    for (auto const* s : {&u0, &u1}) {
      for (auto const& e : *s) {
        auto d = disp_of(e);
        md     = any ? std::min(md, d) : d;
        any    = true;
      }
    }
    rep.min_displacement = md;
    rep.fraction0  = static_cast<double>(u0.size()) / double(total);
    rep.fraction1  = static_cast<double>(u1.size()) / double(total);
    rep.stage      = stage.empty() ? "none" : stage;
    rep.sweep_step = step;
    return rep;
  }

  std::vector<std::string> verify_partition(WordSet const& u,
                                            PartitionReport const& rep,
                                            ActionConstants const& c) {
    std::vector<std::string> fails;
    auto const fresh = energy_basepoint(u);
    if (fresh.basepoint != rep.energy.basepoint
        || fresh.energy != rep.energy.energy) {
      fails.push_back("basepoint is not the energy minimiser");
    }
    auto const& x0 = fresh.basepoint;
    auto d0 = [&](GroupWord const& y) { return distance(x0, y); };
    auto product = [&](GroupWord const& a, GroupWord const& b) {
      return static_cast<long>(d0(a) + d0(b)) - static_cast<long>(distance(a, b));
    };
    long const limit = 2 * static_cast<long>(c.r);
    long       worst1 = 0, worst2 = 0;
    std::size_t max0 = 0;
    std::size_t min1 = static_cast<std::size_t>(-1);
    for (auto const& a : rep.u0) {
      if (!u.contains(a)) {
        fails.push_back("U0 element " + a.to_string() + " is not in U");
      }
      auto da = d0(a * x0);
      max0    = std::max(max0, da);
      if (da < c.k_disp) {
        fails.push_back("U0 element " + a.to_string() + " has displacement "
                        + std::to_string(da));
      }
      for (auto const& b : rep.u1) {
        worst1 = std::max(worst1, product(a.inverse() * x0, b * x0));
        worst2 = std::max(worst2, product(a * x0, b.inverse() * x0));
      }
    }
    for (auto const& b : rep.u1) {
      if (!u.contains(b)) {
        fails.push_back("U1 element " + b.to_string() + " is not in U");
      }
      auto db = d0(b * x0);
      min1    = std::min(min1, db);
      if (db < c.k_disp) {
        fails.push_back("U1 element " + b.to_string() + " has displacement "
                        + std::to_string(db));
      }
    }
    if (worst1 > limit) {
      fails.push_back("(U0^-1 x0, U1 x0) reaches "
                      + HalfInteger{worst1}.to_string());
    }
    if (worst2 > limit) {
      fails.push_back("(U0 x0, U1^-1 x0) reaches "
                      + HalfInteger{worst2}.to_string());
    }
    for (auto const* s : {&rep.u0, &rep.u1}) {
      if (200 * s->size() < u.size()) {
        fails.push_back("a part has " + std::to_string(s->size())
                        + " elements, below |U|/200");
      }
    }
    if (!rep.u0.empty() && !rep.u1.empty() && max0 > min1) {
      fails.push_back("displacement ordering fails: max over U0 "
                      + std::to_string(max0) + " > min over U1 "
                      + std::to_string(min1));
    }
    return fails;
  }

}  // namespace psg
