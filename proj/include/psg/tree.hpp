// The free group acting on its Cayley tree.
//
// Vertices of the tree are reduced words; d(x, y) = |x^-1 y|.  Every
// function here requires an edgeless defining graph and throws DomainError
// otherwise.

#ifndef PSG_TREE_HPP_
#define PSG_TREE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "psg/rational.hpp"
#include "psg/word.hpp"

namespace psg {

  using TreeVertex = GroupWord;

  // Value twice/2.  Gromov products in a simplicial tree are integers, the
  // type keeps the general definition honest.
  struct HalfInteger {
    long twice = 0;

    std::string to_string() const;
    friend auto operator<=>(HalfInteger, HalfInteger) = default;
  };

  std::size_t distance(TreeVertex const& x, TreeVertex const& y);

  HalfInteger gromov_product(TreeVertex const& x, TreeVertex const& y,
                             TreeVertex const& base);

  struct EnergyReport {
    TreeVertex  basepoint;
    Rational    energy;        // (1/|U|) Σ d(x0, u x0)
    std::size_t displacement;  // max d(x0, u x0)
  };

  // Exact minimiser of Σ d(x, u x) over the prefixes of the elements of U
  // and U^-1; ties go to the shortlex-least vertex.  Throws DomainError on
  // an empty set.
  EnergyReport energy_basepoint(WordSet const& u);

  std::size_t displacement(WordSet const& u);

  struct TranslationLength {
    std::size_t tau;
    double      ratio_at_50;  // d(e, g^50 e) / 50
    bool        converged;    // |ratio - tau| <= 2|g|/50
  };

  TranslationLength stable_translation_length(GroupWord const& g);

  struct ActionConstants {
    double      delta      = 0;  // hyperbolicity of the tree
    double      bottleneck = 0;
    Rational    kappa0     = 1;
    std::size_t n0         = 1;
    std::size_t nu         = 1;
    std::size_t r          = 4;   // sphere radius
    std::size_t k_disp     = 40;  // displacement threshold

    // Throws DomainError unless kappa0 >= delta, n0 >= 1, r >= 1 and
    // k_disp >= 10 r.
    void validate() const;
  };

  struct PartitionReport {
    EnergyReport energy;
    WordSet      u0, u1;
    HalfInteger  cross_inv0_1;  // max (u0^-1 x0, u1 x0)_{x0}
    HalfInteger  cross_0_inv1;  // max (u0 x0, u1^-1 x0)_{x0}
    std::size_t  min_displacement = 0;
    double       fraction0 = 0, fraction1 = 0;
    std::string  stage;   // which branch of the sweep produced the pair
    std::size_t  sweep_step = 0;
  };

  // The sphere-point sweep followed by the median split.  Throws
  // PreconditionError when fewer than 3/4 of U have displacement >= k_disp.
  PartitionReport reduction_partition(WordSet const& u,
                                      ActionConstants const& c);

  // Recomputes every conclusion from raw distances: both cross maxima <= r,
  // 200 |U_i| >= |U|, k_disp <= d(x0,u0 x0) <= d(x0,u1 x0), U_i ⊆ U.
  // Returns the failed checks, empty when all pass.
  std::vector<std::string> verify_partition(WordSet const& u,
                                            PartitionReport const& rep,
                                            ActionConstants const& c);

}  // namespace psg

#endif  // PSG_TREE_HPP_
