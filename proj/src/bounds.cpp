#include "psg/bounds.hpp"

#include <cmath>

#include "psg/error.hpp"

namespace psg {

  namespace {

    using Inputs = std::map<std::string, Rational>;

    struct TagSpec {
      std::string              tag;
      std::vector<std::string> inputs;
    };

    std::vector<TagSpec> const& specs() {
      static std::vector<TagSpec> const s = {
          {"helfgott", {"alpha", "beta", "size"}},
          {"approx_bound", {"k", "alpha", "beta"}},
          {"ueg_rate", {"alpha", "beta", "s"}},
          {"factors", {"alpha", "beta", "m"}},
          {"bounded_to_one", {"alpha", "k"}},
          {"supergroup", {"alpha", "beta", "d"}},
          {"kchoice", {"delta", "kappa0", "n0"}},
          {"shortlox", {"alpha", "beta", "k"}},
      };
      return s;
    }

    Rational const& get(Inputs const& in, std::string const& name) {
      auto it = in.find(name);
      if (it == in.end()) {
        throw DomainError("missing input '" + name + "'");
      }
      return it->second;
    }

    Rational positive(Inputs const& in, std::string const& name) {
      auto const& v = get(in, name);
      if (v <= 0) {
        throw DomainError("input '" + name + "' must be positive");
      }
      return v;
    }

    unsigned long positive_integer(Inputs const& in, std::string const& name,
                                   unsigned long limit = 1'000'000) {
      auto v = positive(in, name);
      if (!is_integer(v)) {
        throw DomainError("input '" + name + "' must be an integer");
      }
      if (v > limit) {
        throw DomainError("input '" + name + "' exceeds "
                          + std::to_string(limit));
      }
      return numerator(v).convert_to<unsigned long>();
    }

    BigInt ceil_of(Rational const& q) {
      BigInt n = numerator(q);
      BigInt d = denominator(q);
      BigInt f = n / d;
      if (f * d != n && n > 0) {
        f += 1;
      }
      return f;
    }

    Rational pow_int(Rational base, unsigned long e) {
      Rational r = 1;
      while (e > 0) {
        if (e & 1U) {
          r *= base;
        }
        e >>= 1U;
        if (e > 0) {
          base *= base;
        }
      }
      return r;
    }

    BoundValue exact(std::string name, Rational q) {
      double d = to_double(q);
      return {std::move(name), std::move(q), d};
    }

    BoundValue approx(std::string name, double d) {
      return {std::move(name), std::nullopt, d};
    }

  }  // namespace

  BoundValue const& BoundResult::at(std::string_view name) const {
    for (auto const& v : values) {
      if (v.name == name) {
        return v;
      }
    }
    throw DomainError("no value '" + std::string(name) + "' in " + tag);
  }

  std::vector<std::string> const& bound_tags() {
    static std::vector<std::string> const tags = [] {
      std::vector<std::string> t;
      for (auto const& s : specs()) {
        t.push_back(s.tag);
      }
      return t;
    }();
    return tags;
  }

  std::vector<std::string> const& bound_inputs(std::string_view tag) {
    for (auto const& s : specs()) {
      if (s.tag == tag) {
        return s.inputs;
      }
    }
    throw DomainError("unknown bound tag '" + std::string(tag) + "'");
  }

  BoundResult bound_calculator(std::string_view tag, Inputs const& in) {
    bound_inputs(tag);
    BoundResult r{std::string(tag), {}};

    if (tag == "helfgott") {
      auto a = positive(in, "alpha");
      auto b = positive(in, "beta");
      auto s = positive(in, "size");
      double db = to_double(b);
      double ln = (db * std::log(to_double(a)) - std::log(8.0)) / 3.0
                  + (1.0 + db / 6.0) * std::log(to_double(s));
      r.values.push_back(approx("lower_bound", std::exp(ln)));
    } else if (tag == "approx_bound") {
      auto k = positive(in, "k");
      auto a = positive(in, "alpha");
      auto b = positive(in, "beta");
      if (k < 1) {
        throw DomainError("k must be at least 1");
      }
      auto c = ceil_of(Rational(2) / b);
      if (c > 100000) {
        throw DomainError("ceil(2/beta) is too large");
      }
      auto e = c.convert_to<unsigned long>() - 1;
      r.values.push_back(exact("size_bound", pow_int(k, e) / (a * a)));
    } else if (tag == "ueg_rate") {
      auto a = positive(in, "alpha");
      auto b = positive(in, "beta");
      auto s = positive(in, "s");
      auto m = ceil_of(Rational(1) / a) + 1;
      Rational base = 1 + a * s;
      Rational ex   = b / Rational(m);
      r.values.push_back(exact("m", Rational(m)));
      r.values.push_back(exact("exponent", ex));
      if (is_integer(ex)) {
        r.values.push_back(exact(
            "rate", pow_int(base, numerator(ex).convert_to<unsigned long>())));
      } else {
        r.values.push_back(approx(
            "rate", std::pow(to_double(base), to_double(ex))));
      }
    } else if (tag == "factors") {
      auto a = positive(in, "alpha");
      auto b = positive(in, "beta");
      auto m = positive_integer(in, "m", 10000);
      r.values.push_back(exact("alpha", pow_int(a, m)));
      r.values.push_back(exact("beta", b / m));
    } else if (tag == "bounded_to_one") {
      auto a = positive(in, "alpha");
      auto k = positive_integer(in, "k");
      r.values.push_back(exact("alpha", a / k));
    } else if (tag == "supergroup") {
      auto a = positive(in, "alpha");
      auto b = positive(in, "beta");
      auto d = positive_integer(in, "d", 6);
      unsigned long fact = 1;
      for (unsigned long i = 2; i <= d; ++i) {
        fact *= i;
      }
      unsigned long m     = 2 * fact + 1;
      Rational      m_b   = Rational(m) / b;
      r.values.push_back(exact("m", Rational(m)));
      if (is_integer(m_b) && m_b <= 4096) {
        auto p = pow_int(Rational(2), numerator(m_b).convert_to<unsigned long>());
        r.values.push_back(exact("alpha", a / (p * d)));
      } else {
        double ln = std::log(to_double(a)) - to_double(m_b) * std::log(2.0)
                    - std::log(double(d));
        r.values.push_back(approx("alpha", std::exp(ln)));
      }
      r.values.push_back(exact("beta", b / m));
    } else if (tag == "kchoice") {
      auto delta  = positive(in, "delta");
      auto kappa0 = positive(in, "kappa0");
      auto n0     = positive(in, "n0");
      if (kappa0 < delta) {
        throw DomainError("kappa0 must be at least delta");
      }
      if (n0 < 1) {
        throw DomainError("n0 must be at least 1");
      }
      Rational den = Rational(pow10(52)) * pow_int(n0, 6) * kappa0 * kappa0;
      r.values.push_back(exact("alpha", delta * delta / den));
      r.values.push_back(exact("K", Rational(pow10(14)) * kappa0));
    } else if (tag == "shortlox") {
      auto a = positive(in, "alpha");
      auto b = positive(in, "beta");
      auto k = positive(in, "k");
      r.values.push_back(exact("alpha", a));
      r.values.push_back(exact("beta", b / k));
    }
    return r;
  }

}  // namespace psg
