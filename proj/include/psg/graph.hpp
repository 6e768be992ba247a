// Finite simple graphs defining right-angled Artin groups.
//
// Vertices are indexed 0..n-1 in file order; that order is the canonical
// generator order used by every normal form downstream.  Vertex sets are
// bitmasks, so a graph has at most 64 vertices.

#ifndef PSG_GRAPH_HPP_
#define PSG_GRAPH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psg {

  inline constexpr std::size_t max_vertices = 64;
  inline constexpr std::size_t default_oracle_cap = 12;

  // Sorted duplicate-free set of vertex indices of some parent graph.
  class VertexSet {
   public:
    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(std::uint64_t mask) noexcept : mask_(mask) {}

    static VertexSet from_indices(std::vector<std::size_t> const& indices);

    static constexpr VertexSet single(std::size_t v) noexcept {
      return VertexSet(std::uint64_t(1) << v);
    }

    // {0, ..., n-1}
    static constexpr VertexSet range(std::size_t n) noexcept {
      return VertexSet(n >= 64 ? ~std::uint64_t(0)
                               : (std::uint64_t(1) << n) - 1);
    }

    constexpr std::uint64_t mask() const noexcept {
      return mask_;
    }

    constexpr bool empty() const noexcept {
      return mask_ == 0;
    }

    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(mask_));
    }

    constexpr bool contains(std::size_t v) const noexcept {
      return v < 64 && ((mask_ >> v) & 1U) != 0;
    }

    constexpr bool subset_of(VertexSet other) const noexcept {
      return (mask_ & ~other.mask_) == 0;
    }

    constexpr bool intersects(VertexSet other) const noexcept {
      return (mask_ & other.mask_) != 0;
    }

    // Least index; undefined on the empty set.
    constexpr std::size_t front() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(mask_));
    }

    std::vector<std::size_t> indices() const;

    constexpr VertexSet operator|(VertexSet o) const noexcept {
      return VertexSet(mask_ | o.mask_);
    }
    constexpr VertexSet operator&(VertexSet o) const noexcept {
      return VertexSet(mask_ & o.mask_);
    }
    constexpr VertexSet operator-(VertexSet o) const noexcept {
      return VertexSet(mask_ & ~o.mask_);
    }
    VertexSet& operator|=(VertexSet o) noexcept {
      mask_ |= o.mask_;
      return *this;
    }

    friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;

    // Orders sets by their sorted index sequences, lexicographically.
    friend bool operator<(VertexSet a, VertexSet b) noexcept;

   private:
    std::uint64_t mask_ = 0;
  };

  class DefiningGraph {
   public:
    using Edge = std::pair<std::size_t, std::size_t>;

    // Throws DomainError on duplicate names, bad endpoints or self-loops.
    // Duplicate edges are merged.
    DefiningGraph(std::vector<std::string> names, std::vector<Edge> const& edges);

    std::size_t num_vertices() const noexcept {
      return names_.size();
    }

    std::string const& name(std::size_t v) const {
      return names_.at(v);
    }

    std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    std::optional<std::size_t> index_of(std::string_view name) const;

    // Throws DomainError if the name is unknown.
    std::size_t vertex(std::string_view name) const;

    bool adjacent(std::size_t u, std::size_t v) const noexcept {
      return ((adj_[u] >> v) & 1U) != 0;
    }

    VertexSet neighbours(std::size_t v) const noexcept {
      return VertexSet(adj_[v]);
    }

    VertexSet vertices() const noexcept {
      return VertexSet::range(names_.size());
    }

    bool edgeless() const noexcept {
      return num_edges_ == 0;
    }

    std::size_t num_edges() const noexcept {
      return num_edges_;
    }

    // Sorted (i < j) edge list.
    std::vector<Edge> edges() const;

    std::string format_set(VertexSet s) const;

    friend bool operator==(DefiningGraph const& a, DefiningGraph const& b) {
      return a.names_ == b.names_ && a.adj_ == b.adj_;
    }

   private:
    std::vector<std::string> names_;
    std::vector<std::uint64_t> adj_;
    std::size_t num_edges_ = 0;
  };

  using GraphPtr = std::shared_ptr<DefiningGraph const>;

  // Graph file format: `#` comments, one `vertices:` line, `edge: u v`
  // lines.  Throws ParseError carrying the offending line number.
  DefiningGraph parse_graph(std::string_view text);
  std::string format_graph(DefiningGraph const& g);

  DefiningGraph complement(DefiningGraph const& g);

  // Vertices keep their relative order; index i of the result is the i-th
  // smallest member of w.
  DefiningGraph induced_subgraph(DefiningGraph const& g, VertexSet w);

  // Connected components of the subgraph induced by w, each as a set of
  // parent indices, sorted by least vertex.
  std::vector<VertexSet> components_within(DefiningGraph const& g,
                                           VertexSet w);
  // Same, for the complement of the induced subgraph.
  std::vector<VertexSet> complement_components_within(DefiningGraph const& g,
                                                      VertexSet w);

  std::vector<VertexSet> connected_components(DefiningGraph const& g);

  // One nontrivial join bipartition Γ(w) = Γ(A) * Γ(B): A is the complement
  // component containing the least vertex, B the rest.  Absent when the
  // complement of Γ(w) is connected or |w| < 2.
  std::optional<std::pair<VertexSet, VertexSet>> join_factors_within(
      DefiningGraph const& g,
      VertexSet w);
  std::optional<std::pair<VertexSet, VertexSet>> join_factors(
      DefiningGraph const& g);

  // Finest join decomposition of Γ(w): the complement components of Γ(w).
  std::vector<VertexSet> join_decomposition(DefiningGraph const& g,
                                            VertexSet w);

  VertexSet link(DefiningGraph const& g, std::size_t v);
  VertexSet star(DefiningGraph const& g, std::size_t v);

  // Throws DomainError on the empty graph.
  std::size_t max_clique_size(DefiningGraph const& g);
  std::size_t max_clique_size_within(DefiningGraph const& g, VertexSet w);

  // Every W ⊆ V with |W| >= 2 whose induced subgraph is a nontrivial join,
  // in increasing mask order.  Exhaustive; throws OracleCapExceeded when
  // |V| > cap.
  std::vector<VertexSet> enumerate_subjoins(
      DefiningGraph const& g,
      std::size_t       cap = default_oracle_cap);

}  // namespace psg

#endif  // PSG_GRAPH_HPP_
