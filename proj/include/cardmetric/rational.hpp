#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include <boost/rational.hpp>

#include "cardmetric/error.hpp"

namespace cardmetric {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

/// Parses "p", "p/q" or a finite decimal such as "2.5".
inline Rational parse_rational(const std::string& text) {
  try {
    std::size_t used = 0;
    if (auto slash = text.find('/'); slash != std::string::npos) {
      auto num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw ParseError("malformed rational", used);
      auto den_text = text.substr(slash + 1);
      auto den = std::stoll(den_text, &used);
      if (used != den_text.size()) throw ParseError("malformed rational", slash + 1 + used);
      if (den == 0) throw ParseError("zero denominator", slash + 1);
      return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      auto frac = text.substr(dot + 1);
      std::int64_t scale = 1;
      for (char c : frac) {
        if (c < '0' || c > '9') throw ParseError("malformed decimal", dot + 1);
        scale *= 10;
      }
      auto whole = text.substr(0, dot);
      bool negative = !whole.empty() && whole[0] == '-';
      std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
      std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
      Rational mag = Rational(negative ? -w : w) + Rational(f, scale);
      return negative ? -mag : mag;
    }
    auto v = std::stoll(text, &used);
    if (used != text.size()) throw ParseError("malformed rational", used);
    return Rational(v);
  } catch (const std::logic_error&) {
    throw ParseError("malformed rational '" + text + "'", 0);
  }
}

/// A Lipschitz-type constant that may be unbounded.
struct ExtendedRational {
  std::optional<Rational> finite;  // nullopt = infinity

  static ExtendedRational infinity() { return {}; }
  bool is_infinite() const { return !finite.has_value(); }

  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;
};

inline std::string to_string(const ExtendedRational& k) {
  return k.is_infinite() ? std::string("inf") : to_string(*k.finite);
}

}  // namespace cardmetric
