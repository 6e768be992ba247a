// Elements of a right-angled Artin group A(Γ) held in canonical form.
//
// A GroupWord stores the lexicographically least reduced word among all
// words obtained from it by swapping adjacent commuting letters.  Letters
// are ordered by (vertex index, + before -), so the canonical form is a
// function of the group element alone and equality of GroupWords is
// equality in A(Γ).

#ifndef PSG_WORD_HPP_
#define PSG_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psg/graph.hpp"

namespace psg {

  // x^{+1} or x^{-1} for a vertex x.  Encoded as 2*x + (inverse ? 1 : 0),
  // which makes the natural code order the canonical letter order.
  class Letter {
   public:
    constexpr Letter() noexcept = default;
    constexpr Letter(std::size_t vertex, bool inverse) noexcept
        : code_(static_cast<std::uint8_t>(2 * vertex + (inverse ? 1 : 0))) {}

    static constexpr Letter from_code(std::uint8_t c) noexcept {
      Letter l;
      l.code_ = c;
      return l;
    }

    constexpr std::size_t vertex() const noexcept {
      return code_ >> 1;
    }
    constexpr bool inverse() const noexcept {
      return (code_ & 1U) != 0;
    }
    constexpr int sign() const noexcept {
      return inverse() ? -1 : 1;
    }
    constexpr std::uint8_t code() const noexcept {
      return code_;
    }
    constexpr Letter inverted() const noexcept {
      return from_code(static_cast<std::uint8_t>(code_ ^ 1U));
    }

    friend constexpr auto operator<=>(Letter, Letter) noexcept = default;

   private:
    std::uint8_t code_ = 0;
  };

  using Letters = std::vector<Letter>;

  struct LettersHash {
    std::size_t operator()(Letters const& w) const noexcept;
  };

  // Raw letter-sequence algorithms, for callers that manage their own
  // storage (product-set enumeration, oracles).  `w` is always reduced on
  // entry and exit.
  namespace word_ops {
    // Appends x to the reduced word w, cancelling against the last letter
    // on x's vertex when only commuting letters separate them.
    void append_reduced(Letters& w, Letter x, DefiningGraph const& g);

    // Rewrites the reduced word w as its lexicographically least
    // commutation-equivalent form.
    void canonicalize(Letters& w, DefiningGraph const& g);

    Letters normal_form(std::span<Letter const> raw, DefiningGraph const& g);

    // Canonical form of u·v, both canonical, written into out.
    void multiply_into(Letters const&       u,
                       Letters const&       v,
                       DefiningGraph const& g,
                       Letters&             out);

    Letters inverse(Letters const& w, DefiningGraph const& g);

    std::string format(Letters const& w, DefiningGraph const& g);
  }  // namespace word_ops

  class GroupWord {
   public:
    // The identity.
    explicit GroupWord(GraphPtr graph);

    // Canonical form of an arbitrary letter sequence.  Throws DomainError
    // if a letter names a vertex outside the graph.
    GroupWord(GraphPtr graph, std::span<Letter const> raw);

    // Wraps letters already known to be canonical; no checks.
    static GroupWord from_canonical(GraphPtr graph, Letters letters);

    GraphPtr const& graph_ptr() const noexcept {
      return graph_;
    }
    DefiningGraph const& graph() const noexcept {
      return *graph_;
    }

    Letters const& letters() const noexcept {
      return letters_;
    }

    // Word length of the element.
    std::size_t length() const noexcept {
      return letters_.size();
    }

    bool is_identity() const noexcept {
      return letters_.empty();
    }

    GroupWord inverse() const;

    // Throws DomainError when the graphs differ.
    GroupWord operator*(GroupWord const& other) const;

    VertexSet support() const noexcept;

    // Space-separated tokens, `x^-1` for inverse letters; "" for the
    // identity.
    std::string to_string() const;

    friend bool operator==(GroupWord const& a, GroupWord const& b) noexcept {
      return a.letters_ == b.letters_;
    }

    // Shortlex on letter codes.
    friend std::strong_ordering operator<=>(GroupWord const& a,
                                            GroupWord const& b) noexcept;

   private:
    GroupWord(GraphPtr graph, Letters letters, int /*tag*/);

    GraphPtr graph_;
    Letters  letters_;
  };

  struct GroupWordHash {
    std::size_t operator()(GroupWord const& w) const noexcept {
      return LettersHash()(w.letters());
    }
  };

  bool same_graph(DefiningGraph const& a, DefiningGraph const& b) noexcept;
  void require_same_graph(GroupWord const& a, GroupWord const& b);

  GroupWord multiply(GroupWord const& u, GroupWord const& v);
  GroupWord invert(GroupWord const& u);
  GroupWord power(GroupWord const& u, long exponent);
  GroupWord conjugate(GroupWord const& h, GroupWord const& g);  // h g h^-1

  // Vertices occurring in the canonical form; empty iff identity.
  VertexSet support(GroupWord const& u);

  // Word syntax: whitespace-separated tokens `x` or `x^-1`.  The empty
  // string is the identity.  Throws ParseError.
  GroupWord parse_word(GraphPtr graph, std::string_view text);

  // u = conjugator · core · conjugator^-1 with core cyclically reduced.
  struct CyclicDecomposition {
    GroupWord conjugator;
    GroupWord core;
  };

  CyclicDecomposition cyclic_reduce(GroupWord const& u);

  // Every cyclic permutation of the canonical form is reduced.
  bool is_cyclically_reduced(GroupWord const& u);

  bool commutes(GroupWord const& u, GroupWord const& v);

  // u = root^exponent with exponent maximal.  Throws DomainError on the
  // identity.
  struct PrimitiveRoot {
    GroupWord   root;
    std::size_t exponent;
  };

  PrimitiveRoot primitive_root(GroupWord const& u);

  // Finite set of group elements, deduplicated by canonical form and kept
  // sorted shortlex.
  class WordSet {
   public:
    explicit WordSet(GraphPtr graph);
    WordSet(GraphPtr graph, std::vector<GroupWord> elements);

    GraphPtr const& graph_ptr() const noexcept {
      return graph_;
    }
    DefiningGraph const& graph() const noexcept {
      return *graph_;
    }

    std::vector<GroupWord> const& elements() const noexcept {
      return elements_;
    }

    std::size_t size() const noexcept {
      return elements_.size();
    }
    bool empty() const noexcept {
      return elements_.empty();
    }

    auto begin() const noexcept {
      return elements_.begin();
    }
    auto end() const noexcept {
      return elements_.end();
    }

    bool contains(GroupWord const& w) const;

    // Closed under inversion.
    bool symmetric() const noexcept {
      return symmetric_;
    }

    // Union of the supports of the elements.
    VertexSet support() const noexcept;

    std::size_t max_length() const noexcept;

    friend bool operator==(WordSet const& a, WordSet const& b) noexcept {
      return a.elements_ == b.elements_;
    }

   private:
    void normalise();

    GraphPtr               graph_;
    std::vector<GroupWord> elements_;
    bool                   symmetric_ = true;
  };

  WordSet symmetric_closure(WordSet const& s);
  WordSet inverse_set(WordSet const& s);

  // Set file: one word per line (an empty line is the identity); `#`
  // starts a comment line; an optional first line `symmetric: true`
  // requests closure under inversion.  Throws ParseError.
  WordSet parse_word_set(GraphPtr graph, std::string_view text);
  std::string format_word_set(WordSet const& s);

}  // namespace psg

template <>
struct std::hash<psg::GroupWord> : psg::GroupWordHash {};

#endif  // PSG_WORD_HPP_
