#include "psg/word.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <numeric>

#include "psg/error.hpp"
#include "text.hpp"

namespace psg {

  std::size_t LettersHash::operator()(Letters const& w) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto l : w) {
      h ^= l.code();
      h *= 0x100000001b3ULL;
    }
    h ^= w.size();
    h *= 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }

  ////////////////////////////////////////////////////////////////////////
  // word_ops
  ////////////////////////////////////////////////////////////////////////

  namespace word_ops {

    void append_reduced(Letters& w, Letter x, DefiningGraph const& g) {
      auto const v = x.vertex();
      for (std::size_t i = w.size(); i-- > 0;) {
        auto const y = w[i];
        if (y.vertex() == v) {
          if (y == x.inverted()) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            return;
          }
          break;
        }
        if (!g.adjacent(v, y.vertex())) {
          break;
        }
      }
      w.push_back(x);
    }

    // Greedy lex-least linear extension of the dependence order.  The first
    // unemitted occurrence of vertex v may be emitted once every vertex
    // that does not commute with v has no unemitted occurrence before it.
    void canonicalize(Letters& w, DefiningGraph const& g) {
      auto const n = w.size();
      if (n < 2 || g.edgeless()) {
        return;
      }
      auto const nv = g.num_vertices();

      // Positions of each vertex, in order, as a linked list through
      // `next_same`.  Scratch storage is reused across calls.
      thread_local std::vector<std::size_t> next_same;
      thread_local Letters                  out;
      std::array<std::size_t, max_vertices> head;
      std::array<std::size_t, max_vertices> tail;
      head.fill(n);
      next_same.assign(n, n);
      std::uint64_t active = 0;
      for (std::size_t i = 0; i < n; ++i) {
        auto v = w[i].vertex();
        if (head[v] == n) {
          head[v] = i;
          active |= std::uint64_t(1) << v;
        } else {
          next_same[tail[v]] = i;
        }
        tail[v] = i;
      }

      std::array<std::uint64_t, max_vertices> blockers;
      for (std::size_t v = 0; v < nv; ++v) {
        blockers[v] = ~g.neighbours(v).mask() & ~(std::uint64_t(1) << v);
      }

      out.clear();
      while (active != 0) {
        for (auto m = active; m != 0; m &= m - 1) {
          auto v    = static_cast<std::size_t>(std::countr_zero(m));
          auto p    = head[v];
          bool free = true;
          for (auto b = blockers[v] & active; b != 0; b &= b - 1) {
            if (head[std::countr_zero(b)] < p) {
              free = false;
              break;
            }
          }
          if (free) {
            out.push_back(w[p]);
            head[v] = next_same[p];
            if (head[v] == n) {
              active &= ~(std::uint64_t(1) << v);
            }
            break;
          }
        }
      }
      std::copy(out.begin(), out.end(), w.begin());
    }

    Letters normal_form(std::span<Letter const> raw, DefiningGraph const& g) {
      Letters w;
      w.reserve(raw.size());
      for (auto x : raw) {
        append_reduced(w, x, g);
      }
      canonicalize(w, g);
      return w;
    }

    void multiply_into(Letters const&       u,
                       Letters const&       v,
                       DefiningGraph const& g,
                       Letters&             out) {
      out.clear();
      out.reserve(u.size() + v.size());
      out.insert(out.end(), u.begin(), u.end());
      if (g.edgeless()) {
        // Free cancellation at the junction only.
        std::size_t i = 0;
        while (i < v.size() && !out.empty() && out.back() == v[i].inverted()) {
          out.pop_back();
          ++i;
        }
        out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(i),
                   v.end());
        return;
      }
      for (auto x : v) {
        append_reduced(out, x, g);
      }
      canonicalize(out, g);
    }

    Letters inverse(Letters const& w, DefiningGraph const& g) {
      Letters out;
      out.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back(it->inverted());
      }
      canonicalize(out, g);
      return out;
    }

    std::string format(Letters const& w, DefiningGraph const& g) {
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
          out += ' ';
        }
        out += g.name(w[i].vertex());
        if (w[i].inverse()) {
          out += "^-1";
        }
      }
      return out;
    }

  }  // namespace word_ops

  ////////////////////////////////////////////////////////////////////////
  // GroupWord
  ////////////////////////////////////////////////////////////////////////

  GroupWord::GroupWord(GraphPtr graph) : graph_(std::move(graph)) {
    if (!graph_) {
      throw DomainError("null graph");
    }
  }

  GroupWord::GroupWord(GraphPtr graph, std::span<Letter const> raw)
      : graph_(std::move(graph)) {
    if (!graph_) {
      throw DomainError("null graph");
    }
    for (auto l : raw) {
      if (l.vertex() >= graph_->num_vertices()) {
        throw DomainError("letter names vertex " + std::to_string(l.vertex())
                          + " outside the graph");
      }
    }
    letters_ = word_ops::normal_form(raw, *graph_);
  }

  GroupWord::GroupWord(GraphPtr graph, Letters letters, int)
      : graph_(std::move(graph)), letters_(std::move(letters)) {}

  GroupWord GroupWord::from_canonical(GraphPtr graph, Letters letters) {
    return GroupWord(std::move(graph), std::move(letters), 0);
  }

  GroupWord GroupWord::inverse() const {
    return GroupWord(graph_, word_ops::inverse(letters_, *graph_), 0);
  }

  GroupWord GroupWord::operator*(GroupWord const& other) const {
    require_same_graph(*this, other);
    Letters out;
    word_ops::multiply_into(letters_, other.letters_, *graph_, out);
    return GroupWord(graph_, std::move(out), 0);
  }

  VertexSet GroupWord::support() const noexcept {
    std::uint64_t m = 0;
    for (auto l : letters_) {
      m |= std::uint64_t(1) << l.vertex();
    }
    return VertexSet(m);
  }

  std::string GroupWord::to_string() const {
    return word_ops::format(letters_, *graph_);
  }

  std::strong_ordering operator<=>(GroupWord const& a,
                                   GroupWord const& b) noexcept {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end());
  }

  bool same_graph(DefiningGraph const& a, DefiningGraph const& b) noexcept {
    return &a == &b || a == b;
  }

  void require_same_graph(GroupWord const& a, GroupWord const& b) {
    if (!same_graph(a.graph(), b.graph())) {
      throw DomainError("words belong to different graphs");
    }
  }

  GroupWord multiply(GroupWord const& u, GroupWord const& v) {
    return u * v;
  }

  GroupWord invert(GroupWord const& u) {
    return u.inverse();
  }

  GroupWord power(GroupWord const& u, long exponent) {
    GroupWord base = exponent < 0 ? u.inverse() : u;
    auto      n    = exponent < 0 ? -exponent : exponent;
    GroupWord out(u.graph_ptr());
    while (n > 0) {
      if (n & 1) {
        out = out * base;
      }
      n >>= 1;
      if (n > 0) {
        base = base * base;
      }
    }
    return out;
  }

  GroupWord conjugate(GroupWord const& h, GroupWord const& g) {
    return h * g * h.inverse();
  }

  VertexSet support(GroupWord const& u) {
    return u.support();
  }

  GroupWord parse_word(GraphPtr graph, std::string_view text) {
    Letters raw;
    for (auto const& tok : detail::split_ws(text)) {
      std::string_view name = tok;
      bool             inv  = false;
      if (auto caret = name.find('^'); caret != std::string_view::npos) {
        if (name.substr(caret) != "^-1") {
          throw ParseError("bad exponent in token '" + tok
                           + "' (only ^-1 is allowed)");
        }
        name = name.substr(0, caret);
        inv  = true;
      }
      auto v = graph->index_of(name);
      if (!v) {
        throw ParseError("unknown vertex letter '" + std::string(name) + "'");
      }
      raw.emplace_back(*v, inv);
    }
    return GroupWord(std::move(graph), raw);
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclic reduction, roots, commutation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Vertices that do not commute with v, v included.
    std::uint64_t dependent_mask(DefiningGraph const& g, std::size_t v) {
      return ~g.neighbours(v).mask();
    }

    // Position pair (i, j), i < j, where w[i] can be moved to the front,
    // w[j] to the back and w[j] = w[i]^-1; the least such letter w[i] wins.
    std::optional<std::pair<std::size_t, std::size_t>> peelable_pair(
        Letters const&       w,
        DefiningGraph const& g) {
      auto const        n = w.size();
      std::vector<bool> first(n), last(n);
      std::uint64_t     seen = 0;
      for (std::size_t i = 0; i < n; ++i) {
        auto v   = w[i].vertex();
        first[i] = (seen & dependent_mask(g, v)) == 0;
        seen |= std::uint64_t(1) << v;
      }
      seen = 0;
      for (std::size_t i = n; i-- > 0;) {
        auto v  = w[i].vertex();
        last[i] = (seen & dependent_mask(g, v)) == 0;
        seen |= std::uint64_t(1) << v;
      }
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = 0; i < n; ++i) {
        if (!first[i]) {
          continue;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
          if (last[j] && w[j] == w[i].inverted()) {
            if (!best || w[i] < w[best->first]) {
              best = std::make_pair(i, j);
            }
            break;
          }
        }
      }
      return best;
    }
  }  // namespace

  CyclicDecomposition cyclic_reduce(GroupWord const& u) {
    auto const& g = u.graph();
    Letters     w = u.letters();
    Letters     h;
    while (auto pair = peelable_pair(w, g)) {
      auto [i, j] = *pair;
      h.push_back(w[i]);
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    }
    word_ops::canonicalize(w, g);
    return {GroupWord(u.graph_ptr(), h),
            GroupWord::from_canonical(u.graph_ptr(), std::move(w))};
  }

  bool is_cyclically_reduced(GroupWord const& u) {
    return !peelable_pair(u.letters(), u.graph()).has_value();
  }

  bool commutes(GroupWord const& u, GroupWord const& v) {
    require_same_graph(u, v);
    return u * v == v * u;
  }

  PrimitiveRoot primitive_root(GroupWord const& u) {
    if (u.is_identity()) {
      throw DomainError("the identity has no primitive root");
    }
    auto [h, core] = cyclic_reduce(u);
    auto const& g  = u.graph();
    auto const& w  = core.letters();

    std::vector<std::size_t> count(g.num_vertices(), 0);
    for (auto l : w) {
      ++count[l.vertex()];
    }
    std::size_t common = 0;
    for (auto c : count) {
      common = std::gcd(common, c);
    }

    // In core = r^k the first copy of r consists of the first count[v]/k
    // occurrences of each vertex v, since occurrences of one vertex are
    // totally ordered.  So each candidate exponent determines r.
    for (std::size_t k = common; k >= 2; --k) {
      if (common % k != 0) {
        continue;
      }
      std::vector<std::size_t> taken(g.num_vertices(), 0);
      Letters                  r;
      for (auto l : w) {
        if (taken[l.vertex()] < count[l.vertex()] / k) {
          ++taken[l.vertex()];
          r.push_back(l);
        }
      }
      GroupWord root(u.graph_ptr(), r);
      if (power(root, static_cast<long>(k)) == core) {
        return {conjugate(h, root), k};
      }
    }
    return {u, 1};
  }

  ////////////////////////////////////////////////////////////////////////
  // WordSet
  ////////////////////////////////////////////////////////////////////////

  WordSet::WordSet(GraphPtr graph) : graph_(std::move(graph)) {}

  WordSet::WordSet(GraphPtr graph, std::vector<GroupWord> elements)
      : graph_(std::move(graph)), elements_(std::move(elements)) {
    for (auto const& e : elements_) {
      if (!same_graph(e.graph(), *graph_)) {
        throw DomainError("word set element belongs to a different graph");
      }
    }
    normalise();
  }

  void WordSet::normalise() {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
    symmetric_ = std::all_of(
        elements_.begin(), elements_.end(),
        [this](GroupWord const& e) { return contains(e.inverse()); });
  }

  bool WordSet::contains(GroupWord const& w) const {
    return std::binary_search(elements_.begin(), elements_.end(), w);
  }

  VertexSet WordSet::support() const noexcept {
    VertexSet s;
    for (auto const& e : elements_) {
      s |= e.support();
    }
    return s;
  }

  std::size_t WordSet::max_length() const noexcept {
    std::size_t m = 0;
    for (auto const& e : elements_) {
      m = std::max(m, e.length());
    }
    return m;
  }

  WordSet inverse_set(WordSet const& s) {
    std::vector<GroupWord> out;
    out.reserve(s.size());
    for (auto const& e : s) {
      out.push_back(e.inverse());
    }
    return WordSet(s.graph_ptr(), std::move(out));
  }

  WordSet symmetric_closure(WordSet const& s) {
    std::vector<GroupWord> out(s.begin(), s.end());
    for (auto const& e : s) {
      out.push_back(e.inverse());
    }
    return WordSet(s.graph_ptr(), std::move(out));
  }

  WordSet parse_word_set(GraphPtr graph, std::string_view text) {
    std::vector<GroupWord> words;
    bool                   close    = false;
    bool                   seen_any = false;
    auto                   lines    = detail::split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
      auto line = detail::trim(lines[n]);
      if (!line.empty() && line.front() == '#') {
        continue;
      }
      if (!seen_any && line.starts_with("symmetric:")) {
        auto value = detail::trim(line.substr(10));
        if (value == "true") {
          close = true;
        } else if (value != "false") {
          throw ParseError(n + 1, "expected 'symmetric: true' or 'false'");
        }
        seen_any = true;
        continue;
      }
      seen_any = true;
      try {
        words.push_back(parse_word(graph, line));
      } catch (ParseError const& e) {
        throw ParseError(n + 1, e.reason());
      }
    }
    WordSet s(std::move(graph), std::move(words));
    return close ? symmetric_closure(s) : s;
  }

  std::string format_word_set(WordSet const& s) {
    std::string out;
    for (auto const& e : s) {
      out += e.to_string();
      out += '\n';
    }
    return out;
  }

}  // namespace psg
