// Constant calculators for the growth-bound propagation formulas.

#ifndef PSG_BOUNDS_HPP_
#define PSG_BOUNDS_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psg/rational.hpp"

namespace psg {

  struct BoundValue {
    std::string             name;
    std::optional<Rational> exact;  // absent when the value is irrational
    double                  approx = 0;
  };

  struct BoundResult {
    std::string             tag;
    std::vector<BoundValue> values;

    BoundValue const& at(std::string_view name) const;
  };

  // Tags and their inputs:
  //   helfgott        alpha beta size     (alpha^beta/8)^{1/3} size^{1+beta/6}
  //   approx_bound    k alpha beta        k^{ceil(2/beta)-1} / alpha^2
  //   ueg_rate        alpha beta s        (1+alpha s)^{beta/(ceil(1/alpha)+1)}
  //   factors         alpha beta m        (alpha^m, beta/m)
  //   bounded_to_one  alpha k             alpha/k
  //   supergroup      alpha beta d        m = 2 d! + 1, (alpha/(2^{m/beta} d), beta/m)
  //   kchoice         delta kappa0 n0     alpha = delta^2/(10^52 n0^6 kappa0^2), K = 10^14 kappa0
  //   shortlox        alpha beta k        (alpha, beta/k)
  // Throws DomainError on an unknown tag, a missing input or an input
  // outside the formula's domain.
  BoundResult bound_calculator(std::string_view tag,
                               std::map<std::string, Rational> const& inputs);

  std::vector<std::string> const& bound_tags();
  std::vector<std::string> const& bound_inputs(std::string_view tag);

}  // namespace psg

#endif  // PSG_BOUNDS_HPP_
