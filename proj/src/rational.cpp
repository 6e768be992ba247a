#include "psg/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "psg/error.hpp"
#include "text.hpp"

namespace psg {

  namespace {
    bool all_digits(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    }

    // cpp_int reads a leading 0 as an octal prefix.
    BigInt decimal(std::string_view digits) {
      auto nz = digits.find_first_not_of('0');
      return nz == std::string_view::npos ? BigInt(0)
                                          : BigInt{std::string(digits.substr(nz))};
    }

    [[noreturn]] void bad(std::string_view text) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
  }  // namespace

  BigInt pow10(unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) {
      r *= 10;
    }
    return r;
  }

  Rational parse_rational(std::string_view text) {
    auto s = detail::trim(text);
    if (s.empty()) {
      bad(text);
    }
    bool neg = false;
    if (s.front() == '-' || s.front() == '+') {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }

    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      auto p = s.substr(0, slash);
      auto q = s.substr(slash + 1);
      if (!all_digits(p) || !all_digits(q)) {
        bad(text);
      }
      BigInt den = decimal(q);
      if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
      }
      out = Rational(decimal(p), den);
    } else {
      long exp10 = 0;
      if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '-' || es.front() == '+')) {
          eneg = es.front() == '-';
          es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 4) {
          bad(text);
        }
        std::from_chars(es.data(), es.data() + es.size(), exp10);
        if (eneg) {
          exp10 = -exp10;
        }
        s = s.substr(0, e);
      }
      std::string digits;
      if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto ip = s.substr(0, dot);
        auto fp = s.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))
            || (ip.empty() && fp.empty())) {
          bad(text);
        }
        digits = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long>(fp.size());
      } else {
        if (!all_digits(s)) {
          bad(text);
        }
        digits = std::string(s);
      }
      BigInt m = decimal(digits);
      if (exp10 >= 0) {
        out = Rational(m * pow10(static_cast<unsigned>(exp10)));
      } else {
        out = Rational(m, pow10(static_cast<unsigned>(-exp10)));
      }
    }
    return neg ? Rational(-out) : out;
  }

  std::string format_rational(Rational const& q) {
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    if (den == 1) {
      return num.str();
    }
    return num.str() + "/" + den.str();
  }

  double to_double(Rational const& q) {
    return q.convert_to<double>();
  }

  std::string format_double(double x) {
    if (std::isnan(x)) {
      return "nan";
    }
    if (std::isinf(x)) {
      return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, res.ptr);
    auto e = s.find('e');
    if (e == std::string::npos) {
      return s;
    }
    std::string mant = s.substr(0, e);
    std::string ex   = s.substr(e + 1);
    bool        neg  = false;
    if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
      neg = ex[0] == '-';
      ex.erase(0, 1);
    }
    while (ex.size() > 1 && ex[0] == '0') {
      ex.erase(0, 1);
    }
    return mant + "e" + (neg ? "-" : "") + ex;
  }

  bool is_integer(Rational const& q) {
    return boost::multiprecision::denominator(q) == 1;
  }

}  // namespace psg
