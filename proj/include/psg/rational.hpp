// Exact rationals for flags and constant formulas.

#ifndef PSG_RATIONAL_HPP_
#define PSG_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace psg {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  // Accepts `p/q`, a decimal such as `0.00268817`, or scientific notation
  // such as `1e-6`.  Throws ParseError.
  Rational parse_rational(std::string_view text);

  // `p/q`, or `p` when the denominator is 1.
  std::string format_rational(Rational const& q);

  double to_double(Rational const& q);

  // Shortest round-trip decimal, exponent without `+` or leading zeros
  // (`1e14`, `1e-52`).
  std::string format_double(double x);

  bool is_integer(Rational const& q);

  BigInt pow10(unsigned e);

}  // namespace psg

#endif  // PSG_RATIONAL_HPP_
