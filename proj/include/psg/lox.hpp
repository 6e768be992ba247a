// Loxodromic detection and the structural tests built on it.
//
// For connected Γ an element acts loxodromically on the extension graph
// iff the support of its cyclic core lies in no subjoin.  For disconnected
// Γ the relevant tree is the Bass–Serre tree of the free splitting along
// components.

#ifndef PSG_LOX_HPP_
#define PSG_LOX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psg/growth.hpp"
#include "psg/word.hpp"

namespace psg {

  enum class SubjoinMode { fast, oracle };

  struct SubjoinWitness {
    enum class Kind { none, join, star, oracle };

    bool      in_subjoin = false;
    Kind      kind       = Kind::none;
    VertexSet part_a, part_b;   // join: s = part_a ⊔ part_b
    std::size_t star_vertex = 0;
    VertexSet subjoin;          // oracle: a subjoin containing s

    std::string describe(DefiningGraph const& g, VertexSet s) const;
  };

  // Fast mode: s induces a nontrivial join, or s ⊆ star(v) for a vertex v
  // with nonempty link.  Oracle mode: s lies in some member of
  // enumerate_subjoins(g, cap).  Throws DomainError on empty s.
  SubjoinWitness support_in_subjoin(DefiningGraph const& g,
                                    VertexSet s,
                                    SubjoinMode mode = SubjoinMode::fast,
                                    std::size_t cap = default_oracle_cap);

  enum class LoxStatus { loxodromic, elliptic, identity, not_applicable };

  char const* to_string(LoxStatus s);

  struct LoxVerdict {
    LoxStatus   status;
    std::string witness;
  };

  LoxVerdict is_loxodromic(GroupWord const& u);

  // conjugator^-1 · U · conjugator ⊆ A(Γ(v_u)).
  struct SupportResult {
    GroupWord conjugator;
    VertexSet v_u;
    bool      certified = false;
    WordSet   conjugated;
  };

  SupportResult minimal_support_set(WordSet const& u, std::size_t depth = 3);

  struct ShortLoxResult {
    enum class Status { found, not_found, not_applicable };

    Status        status = Status::not_found;
    std::string   reason;
    std::size_t   n = 0;
    SupportResult support;
    GraphPtr      induced;                   // Γ(v_u)
    std::optional<GroupWord> witness_induced;  // in A(Γ(v_u))
    std::optional<GroupWord> witness;          // conjugated back into A(Γ)
  };

  // Least loxodromic element of U'^n for the smallest n <= n_cap, where U'
  // is U conjugated into A(Γ(V_U)).  Throws DomainError unless U is
  // symmetric.
  ShortLoxResult short_loxodromic(WordSet const& u,
                                  std::size_t n_cap,
                                  EnumerationCaps const& caps = {},
                                  std::size_t depth = 3);

  // Two nonempty families of conjugated letters, every member of one
  // commuting with every member of the other.
  struct ProductPartition {
    std::vector<GroupWord> part_a, part_b;
  };

  std::optional<ProductPartition> direct_product_obstruction(WordSet const& u);

  // All non-identity elements are powers of one primitive element (up to
  // inversion).  The root is absent when U has no non-identity element.
  struct CyclicCheck {
    bool                     cyclic = false;
    std::optional<GroupWord> root;
  };

  CyclicCheck cyclic_check(WordSet const& u);

  struct ClassificationReport {
    SupportResult                   support;
    bool                            induced_connected = false;
    bool                            induced_join      = false;
    CyclicCheck                     cyclic;
    std::optional<ProductPartition> obstruction;
    ShortLoxResult                  short_lox;
    GrowthTable                     growth;
    std::vector<Verdict>            verdicts;
  };

  // Best-effort report; each flag carries its own witness.  Throws
  // DomainError unless U is symmetric.
  ClassificationReport classify_subset(WordSet const& u,
                                       GrowthParams const& p,
                                       std::size_t n_cap,
                                       std::size_t n_growth = 3,
                                       EnumerationCaps const& caps = {});

}  // namespace psg

#endif  // PSG_LOX_HPP_
