#include "psg/lox.hpp"

#include <algorithm>

#include "psg/error.hpp"

namespace psg {

  ////////////////////////////////////////////////////////////////////////
  // Subjoins
  ////////////////////////////////////////////////////////////////////////

  std::string SubjoinWitness::describe(DefiningGraph const& g,
                                       VertexSet s) const {
    switch (kind) {
      case Kind::join:
        return g.format_set(s) + " induces the join " + g.format_set(part_a)
               + " * " + g.format_set(part_b);
      case Kind::star:
        return g.format_set(s) + " lies in star(" + g.name(star_vertex) + ")";
      case Kind::oracle:
        return g.format_set(s) + " lies in the subjoin " + g.format_set(subjoin);
      case Kind::none:
        break;
    }
    return g.format_set(s) + " lies in no subjoin";
  }

  SubjoinWitness support_in_subjoin(DefiningGraph const& g, VertexSet s,
                                    SubjoinMode mode, std::size_t cap) {
    if (s.empty()) {
      throw DomainError("support set is empty");
    }
    if (!s.subset_of(g.vertices())) {
      throw DomainError("support set is not contained in the graph");
    }
    SubjoinWitness w;
    if (mode == SubjoinMode::oracle) {
      for (auto j : enumerate_subjoins(g, cap)) {
        if (s.subset_of(j)) {
          w.in_subjoin = true;
          w.kind       = SubjoinWitness::Kind::oracle;
          w.subjoin    = j;
          return w;
        }
      }
      return w;
    }
    if (auto parts = join_factors_within(g, s)) {
      w.in_subjoin = true;
      w.kind       = SubjoinWitness::Kind::join;
      w.part_a     = parts->first;
      w.part_b     = parts->second;
      return w;
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (!link(g, v).empty() && s.subset_of(star(g, v))) {
        w.in_subjoin  = true;
        w.kind        = SubjoinWitness::Kind::star;
        w.star_vertex = v;
        return w;
      }
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Loxodromic verdicts
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(LoxStatus s) {
    switch (s) {
      case LoxStatus::loxodromic:
        return "loxodromic";
      case LoxStatus::elliptic:
        return "elliptic";
      case LoxStatus::identity:
        return "identity";
      case LoxStatus::not_applicable:
        return "not_applicable";
    }
    return "?";
  }

  LoxVerdict is_loxodromic(GroupWord const& u) {
    if (u.is_identity()) {
      return {LoxStatus::identity, "identity element"};
    }
    auto const& g = u.graph();
    if (g.num_vertices() == 1) {
      return {LoxStatus::not_applicable, "single-vertex graph"};
    }
    auto const core = cyclic_reduce(u).core;
    auto const s    = core.support();
    auto const comp = connected_components(g);
    if (comp.size() == 1) {
      auto w = support_in_subjoin(g, s);
      return {w.in_subjoin ? LoxStatus::elliptic : LoxStatus::loxodromic,
              "core support " + w.describe(g, s)};
    }
    std::vector<VertexSet> met;
    for (auto c : comp) {
      if (c.intersects(s)) {
        met.push_back(c);
      }
    }
    std::string names;
    for (auto c : met) {
      names += (names.empty() ? "" : " ") + g.format_set(c);
    }
    if (met.size() >= 2) {
      return {LoxStatus::loxodromic, "core support meets components " + names};
    }
    return {LoxStatus::elliptic, "core support lies in component " + names};
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimal support
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Measure {
      VertexSet   support;
      std::size_t length = 0;
    };

    Measure measure(std::vector<GroupWord> const& ws) {
      Measure m;
      for (auto const& w : ws) {
        m.support |= w.support();
        m.length += w.length();
      }
      return m;
    }

    // c^-1 W c
    std::vector<GroupWord> conjugate_all(std::vector<GroupWord> const& ws,
                                         GroupWord const& c) {
      auto ci = c.inverse();
      std::vector<GroupWord> out;
      out.reserve(ws.size());
      for (auto const& w : ws) {
        out.push_back(ci * w * c);
      }
      return out;
    }

    std::vector<Letter> letters_over(VertexSet s) {
      std::vector<Letter> out;
      for (auto v : s.indices()) {
        out.emplace_back(v, false);
        out.emplace_back(v, true);
      }
      return out;
    }

    bool greedy_step(std::vector<GroupWord>& ws, GroupWord& h) {
      auto const cur = measure(ws);
      for (auto l : letters_over(cur.support)) {
        GroupWord c(h.graph_ptr(), std::span<Letter const>(&l, 1));
        auto cand = conjugate_all(ws, c);
        auto m    = measure(cand);
        if (m.support.subset_of(cur.support)
            && (m.support.size() < cur.support.size()
                || m.length < cur.length)) {
          ws = std::move(cand);
          h  = h * c;
          return true;
        }
      }
      return false;
    }

    // First conjugator of length 1..depth (raw words over the support
    // letters, no immediate cancellation) that makes the support smaller.
    std::optional<GroupWord> exhaustive_search(std::vector<GroupWord> const& ws,
                                               GraphPtr const& g,
                                               std::size_t depth) {
      auto const cur     = measure(ws);
      auto const letters = letters_over(cur.support);
      std::vector<Letter> raw;
      std::optional<GroupWord> found;
      auto rec = [&](auto&& self, std::size_t len) -> bool {
        if (len == raw.size()) {
          GroupWord c(g, raw);
          if (c.is_identity()) {
            return false;
          }
          if (measure(conjugate_all(ws, c)).support.size()
              < cur.support.size()) {
            found = c;
            return true;
          }
          return false;
        }
        for (auto l : letters) {
          if (!raw.empty() && raw.back() == l.inverted()) {
            continue;
          }
          raw.push_back(l);
          bool done = self(self, len);
          raw.pop_back();
          if (done) {
            return true;
          }
        }
        return false;
      };
      for (std::size_t len = 1; len <= depth; ++len) {
        if (rec(rec, len)) {
          return found;
        }
      }
      return std::nullopt;
    }

    constexpr std::size_t exhaustive_support_limit = 8;

  }  // namespace

  SupportResult minimal_support_set(WordSet const& u, std::size_t depth) {
    if (u.empty()) {
      throw DomainError("minimal support of an empty set");
    }
    std::vector<GroupWord> ws(u.begin(), u.end());
    GroupWord              h(u.graph_ptr());
    bool                   certified = false;
    for (;;) {
      while (greedy_step(ws, h)) {
      }
      auto const cur = measure(ws);
      if (depth == 0 || cur.support.size() > exhaustive_support_limit) {
        certified = false;
        break;
      }
      auto c = exhaustive_search(ws, u.graph_ptr(), depth);
      if (!c) {
        certified = true;
        break;
      }
      ws = conjugate_all(ws, *c);
      h  = h * *c;
    }
    auto v = measure(ws).support;
    return {h, v, certified, WordSet(u.graph_ptr(), std::move(ws))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Short loxodromics
  ////////////////////////////////////////////////////////////////////////

  namespace {
    GroupWord map_letters(GroupWord const& w, GraphPtr const& target,
                          std::vector<std::size_t> const& vertex_map) {
      Letters out;
      out.reserve(w.length());
      for (auto l : w.letters()) {
        out.emplace_back(vertex_map.at(l.vertex()), l.inverse());
      }
      return GroupWord(target, out);
    }
  }  // namespace

  ShortLoxResult short_loxodromic(WordSet const& u, std::size_t n_cap,
                                  EnumerationCaps const& caps,
                                  std::size_t depth) {
    if (!u.symmetric()) {
      throw DomainError("short loxodromic search needs a symmetric set");
    }
    ShortLoxResult r{.support = minimal_support_set(u, depth)};
    auto const& g = u.graph();
    auto const  v = r.support.v_u;
    if (v.size() <= 1) {
      r.status = ShortLoxResult::Status::not_applicable;
      r.reason = "the induced graph on " + g.format_set(v) + " has at most one vertex";
      return r;
    }
    r.induced = std::make_shared<DefiningGraph const>(induced_subgraph(g, v));
    if (auto parts = join_factors(*r.induced)) {
      r.status = ShortLoxResult::Status::not_applicable;
      r.reason = "the induced graph on " + g.format_set(v) + " is a join";
      return r;
    }

    auto const idx = v.indices();
    std::vector<std::size_t> to_induced(g.num_vertices(), 0);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      to_induced[idx[i]] = i;
    }
    std::vector<GroupWord> local;
    for (auto const& w : r.support.conjugated) {
      local.push_back(map_letters(w, r.induced, to_induced));
    }
    WordSet const base(r.induced, std::move(local));

    for (std::size_t n = 1; n <= n_cap; ++n) {
      auto const pn = product_set(base, n, caps);
      for (auto const& w : pn) {
        if (is_loxodromic(w).status == LoxStatus::loxodromic) {
          r.status          = ShortLoxResult::Status::found;
          r.n               = n;
          r.witness_induced = w;
          auto back         = map_letters(w, u.graph_ptr(), idx);
          r.witness         = conjugate(r.support.conjugator, back);
          return r;
        }
      }
    }
    r.status = ShortLoxResult::Status::not_found;
    r.reason = "no loxodromic element in U^n for n <= " + std::to_string(n_cap);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Product obstruction, cyclic check, classification
  ////////////////////////////////////////////////////////////////////////

  std::optional<ProductPartition> direct_product_obstruction(WordSet const& u) {
    std::vector<GroupWord> letters;
    for (auto const& e : u) {
      if (e.is_identity()) {
        continue;
      }
      auto dec = cyclic_reduce(e);
      for (auto l : dec.core.letters()) {
        Letter    p(l.vertex(), false);
        GroupWord s(u.graph_ptr(), std::span<Letter const>(&p, 1));
        letters.push_back(conjugate(dec.conjugator, s));
      }
    }
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    auto const n = letters.size();
    if (n < 2) {
      return std::nullopt;
    }

    // Components of the non-commutation graph.
    std::vector<std::vector<bool>> commute(n, std::vector<bool>(n, true));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        commute[i][j] = commute[j][i] = commutes(letters[i], letters[j]);
      }
    }
    std::vector<bool>        in_a(n, false);
    std::vector<std::size_t> stack = {0};
    in_a[0] = true;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (!in_a[j] && !commute[i][j]) {
          in_a[j] = true;
          stack.push_back(j);
        }
      }
    }
    ProductPartition part;
    for (std::size_t i = 0; i < n; ++i) {
      (in_a[i] ? part.part_a : part.part_b).push_back(letters[i]);
    }
    if (part.part_b.empty()) {
      return std::nullopt;
    }
    return part;
  }

  CyclicCheck cyclic_check(WordSet const& u) {
    CyclicCheck c;
    c.cyclic = true;
    for (auto const& e : u) {
      if (e.is_identity()) {
        continue;
      }
      auto r = primitive_root(e).root;
      if (!c.root) {
        auto ri = r.inverse();
        c.root  = ri < r ? ri : r;
      } else if (r != *c.root && r != c.root->inverse()) {
        c.cyclic = false;
        c.root.reset();
        return c;
      }
    }
    return c;
  }

  ClassificationReport classify_subset(WordSet const& u, GrowthParams const& p,
                                       std::size_t n_cap, std::size_t n_growth,
                                       EnumerationCaps const& caps) {
    if (!u.symmetric()) {
      throw DomainError("classification needs a symmetric set");
    }
    ClassificationReport rep{.support   = minimal_support_set(u),
                             .short_lox = short_loxodromic(u, n_cap, caps)};
    auto const& g = u.graph();
    auto const  v = rep.support.v_u;
    if (!v.empty()) {
      rep.induced_connected = components_within(g, v).size() == 1;
      rep.induced_join      = join_factors_within(g, v).has_value();
    }
    rep.cyclic      = cyclic_check(u);
    rep.obstruction = direct_product_obstruction(u);
    if (!rep.obstruction && rep.induced_join) {
      // The conjugated set sits inside the product itself; conjugate its
      // certificate back.
      if (auto inner = direct_product_obstruction(rep.support.conjugated)) {
        auto const& h = rep.support.conjugator;
        for (auto* part : {&inner->part_a, &inner->part_b}) {
          for (auto& x : *part) {
            x = conjugate(h, x);
          }
        }
        rep.obstruction = std::move(inner);
      }
    }
    rep.growth   = growth_table(u, n_growth, false, caps);
    rep.verdicts = check_inequality(rep.growth, p);
    return rep;
  }

}  // namespace psg
