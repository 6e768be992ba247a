#include "psg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "psg/error.hpp"
#include "text.hpp"

namespace psg {

  ////////////////////////////////////////////////////////////////////////
  // VertexSet
  ////////////////////////////////////////////////////////////////////////

  VertexSet VertexSet::from_indices(std::vector<std::size_t> const& indices) {
    std::uint64_t mask = 0;
    for (auto v : indices) {
      if (v >= max_vertices) {
        throw DomainError("vertex index " + std::to_string(v)
                          + " out of range");
      }
      mask |= std::uint64_t(1) << v;
    }
    return VertexSet(mask);
  }

  std::vector<std::size_t> VertexSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
  }

  bool operator<(VertexSet a, VertexSet b) noexcept {
    auto x = a.indices();
    auto y = b.indices();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // DefiningGraph
  ////////////////////////////////////////////////////////////////////////

  DefiningGraph::DefiningGraph(std::vector<std::string> names,
                               std::vector<Edge> const& edges)
      : names_(std::move(names)), adj_(names_.size(), 0) {
    if (names_.size() > max_vertices) {
      throw DomainError("at most " + std::to_string(max_vertices)
                        + " vertices are supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!detail::valid_name(names_[i])) {
        throw DomainError("invalid vertex name '" + names_[i] + "'");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) {
          throw DomainError("duplicate vertex '" + names_[i] + "'");
        }
      }
    }
    for (auto [u, v] : edges) {
      if (u >= names_.size() || v >= names_.size()) {
        throw DomainError("edge endpoint out of range");
      }
      if (u == v) {
        throw DomainError("self-loop at '" + names_[u] + "'");
      }
      adj_[u] |= std::uint64_t(1) << v;
      adj_[v] |= std::uint64_t(1) << u;
    }
    for (auto m : adj_) {
      num_edges_ += static_cast<std::size_t>(std::popcount(m));
    }
    num_edges_ /= 2;
  }

  std::optional<std::size_t> DefiningGraph::index_of(
      std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::size_t DefiningGraph::vertex(std::string_view name) const {
    auto i = index_of(name);
    if (!i) {
      throw DomainError("unknown vertex '" + std::string(name) + "'");
    }
    return *i;
  }

  std::vector<DefiningGraph::Edge> DefiningGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = i + 1; j < names_.size(); ++j) {
        if (adjacent(i, j)) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  std::string DefiningGraph::format_set(VertexSet s) const {
    std::string out = "{";
    bool first = true;
    for (auto v : s.indices()) {
      if (!first) {
        out += ",";
      }
      out += names_.at(v);
      first = false;
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // File format
  ////////////////////////////////////////////////////////////////////////

  DefiningGraph parse_graph(std::string_view text) {
    std::vector<std::string> names;
    bool have_vertices = false;
    struct PendingEdge {
      std::size_t line;
      std::string u, v;
    };
    std::vector<PendingEdge> pending;

    auto lines = detail::split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
      std::size_t const lineno = n + 1;
      auto line = detail::trim(lines[n]);
      if (line.empty() || line.front() == '#') {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(lineno, "expected 'vertices:' or 'edge:'");
      }
      auto key = detail::trim(line.substr(0, colon));
      auto tokens = detail::split_ws(line.substr(colon + 1));
      for (auto const& t : tokens) {
        if (!detail::valid_name(t)) {
          throw ParseError(lineno, "invalid vertex name '" + t + "'");
        }
      }
      if (key == "vertices") {
        if (have_vertices) {
          throw ParseError(lineno, "second 'vertices:' line");
        }
        have_vertices = true;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
          if (std::find(tokens.begin(), tokens.begin() + i, tokens[i])
              != tokens.begin() + i) {
            throw ParseError(lineno, "duplicate vertex '" + tokens[i] + "'");
          }
        }
        if (tokens.size() > max_vertices) {
          throw ParseError(lineno, "too many vertices");
        }
        names = std::move(tokens);
      } else if (key == "edge") {
        if (tokens.size() != 2) {
          throw ParseError(lineno, "an edge needs exactly two endpoints");
        }
        if (tokens[0] == tokens[1]) {
          throw ParseError(lineno, "self-loop at '" + tokens[0] + "'");
        }
        pending.push_back({lineno, tokens[0], tokens[1]});
      } else {
        throw ParseError(lineno, "unknown key '" + std::string(key) + "'");
      }
    }
    if (!have_vertices) {
      throw ParseError(lines.size(), "missing 'vertices:' line");
    }

    std::vector<DefiningGraph::Edge> edges;
    auto lookup = [&](std::string const& s, std::size_t lineno) {
      auto it = std::find(names.begin(), names.end(), s);
      if (it == names.end()) {
        throw ParseError(lineno, "unknown endpoint '" + s + "'");
      }
      return static_cast<std::size_t>(it - names.begin());
    };
    for (auto const& e : pending) {
      edges.emplace_back(lookup(e.u, e.line), lookup(e.v, e.line));
    }
    return DefiningGraph(std::move(names), edges);
  }

  std::string format_graph(DefiningGraph const& g) {
    std::ostringstream os;
    os << "vertices:";
    for (auto const& n : g.names()) {
      os << ' ' << n;
    }
    os << '\n';
    for (auto [u, v] : g.edges()) {
      os << "edge: " << g.name(u) << ' ' << g.name(v) << '\n';
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  DefiningGraph complement(DefiningGraph const& g) {
    std::vector<DefiningGraph::Edge> edges;
    auto const n = g.num_vertices();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!g.adjacent(i, j)) {
          edges.emplace_back(i, j);
        }
      }
    }
    return DefiningGraph(g.names(), edges);
  }

  DefiningGraph induced_subgraph(DefiningGraph const& g, VertexSet w) {
    if (!w.subset_of(g.vertices())) {
      throw DomainError("vertex set is not contained in the graph");
    }
    auto idx = w.indices();
    std::vector<std::string> names;
    for (auto v : idx) {
      names.push_back(g.name(v));
    }
    std::vector<DefiningGraph::Edge> edges;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        if (g.adjacent(idx[i], idx[j])) {
          edges.emplace_back(i, j);
        }
      }
    }
    return DefiningGraph(std::move(names), edges);
  }

  namespace {
    // Components of w under the relation "adjacent in g" (or its
    // complement when `in_complement`).
    std::vector<VertexSet> components_impl(DefiningGraph const& g,
                                           VertexSet            w,
                                           bool in_complement) {
      std::vector<VertexSet> out;
      auto remaining = w.mask();
      while (remaining != 0) {
        std::uint64_t comp     = remaining & (~remaining + 1);
        std::uint64_t frontier = comp;
        while (frontier != 0) {
          std::uint64_t next = 0;
          for (auto m = frontier; m != 0; m &= m - 1) {
            auto v  = static_cast<std::size_t>(std::countr_zero(m));
            auto nb = g.neighbours(v).mask();
            if (in_complement) {
              nb = ~nb & ~(std::uint64_t(1) << v);
            }
            next |= nb;
          }
          next &= w.mask() & ~comp;
          comp |= next;
          frontier = next;
        }
        out.emplace_back(comp);
        remaining &= ~comp;
      }
      return out;
    }
  }  // namespace

  std::vector<VertexSet> components_within(DefiningGraph const& g,
                                           VertexSet            w) {
    return components_impl(g, w, false);
  }

  std::vector<VertexSet> complement_components_within(DefiningGraph const& g,
                                                      VertexSet w) {
    return components_impl(g, w, true);
  }

  std::vector<VertexSet> connected_components(DefiningGraph const& g) {
    return components_within(g, g.vertices());
  }

  std::optional<std::pair<VertexSet, VertexSet>> join_factors_within(
      DefiningGraph const& g,
      VertexSet            w) {
    if (w.size() < 2) {
      return std::nullopt;
    }
    auto comps = complement_components_within(g, w);
    if (comps.size() < 2) {
      return std::nullopt;
    }
    return std::make_pair(comps.front(), w - comps.front());
  }

  std::optional<std::pair<VertexSet, VertexSet>> join_factors(
      DefiningGraph const& g) {
    return join_factors_within(g, g.vertices());
  }

  std::vector<VertexSet> join_decomposition(DefiningGraph const& g,
                                            VertexSet            w) {
    return complement_components_within(g, w);
  }

  VertexSet link(DefiningGraph const& g, std::size_t v) {
    if (v >= g.num_vertices()) {
      throw DomainError("unknown vertex index " + std::to_string(v));
    }
    return g.neighbours(v);
  }

  VertexSet star(DefiningGraph const& g, std::size_t v) {
    return link(g, v) | VertexSet::single(v);
  }

  namespace {
    void clique_search(DefiningGraph const& g,
                       std::uint64_t        candidates,
                       std::size_t          depth,
                       std::size_t&         best) {
      if (candidates == 0) {
        best = std::max(best, depth);
        return;
      }
      if (depth + static_cast<std::size_t>(std::popcount(candidates))
          <= best) {
        return;
      }
      while (candidates != 0) {
        if (depth + static_cast<std::size_t>(std::popcount(candidates))
            <= best) {
          return;
        }
        auto v = static_cast<std::size_t>(std::countr_zero(candidates));
        candidates &= candidates - 1;
        clique_search(g, candidates & g.neighbours(v).mask(), depth + 1, best);
      }
    }
  }  // namespace

  std::size_t max_clique_size_within(DefiningGraph const& g, VertexSet w) {
    if (w.empty()) {
      throw DomainError("max clique of an empty graph");
    }
    std::size_t best = 0;
    clique_search(g, w.mask(), 0, best);
    return best;
  }

  std::size_t max_clique_size(DefiningGraph const& g) {
    return max_clique_size_within(g, g.vertices());
  }

  std::vector<VertexSet> enumerate_subjoins(DefiningGraph const& g,
                                            std::size_t          cap) {
    auto const n = g.num_vertices();
    if (n > cap || n >= 63) {
      throw OracleCapExceeded("subjoin enumeration over "
                              + std::to_string(n) + " vertices exceeds cap "
                              + std::to_string(cap));
    }
    std::vector<VertexSet> out;
    std::uint64_t const    limit = std::uint64_t(1) << n;
    for (std::uint64_t m = 1; m < limit; ++m) {
      VertexSet w(m);
      if (w.size() >= 2 && complement_components_within(g, w).size() >= 2) {
        out.push_back(w);
      }
    }
    return out;
  }

}  // namespace psg
