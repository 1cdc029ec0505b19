#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace extremal {

// Exact arbitrary-precision rationals everywhere a density, weight or
// threshold is reported. Doubles only appear in explicitly approximate
// contexts (Monte Carlo summaries, log-domain identity checks) and are
// labelled as such at the call site.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// "p/q" in lowest terms, or just "p" for integers.
inline std::string fraction_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline double rational_double(const Rational& r) { return r.convert_to<double>(); }

// {"num": "...", "den": "..."} with decimal-string values so arbitrary
// precision survives JSON round trips.
inline nlohmann::json rational_json(const Rational& r) {
  return nlohmann::json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  BigInt num(j.at("num").get<std::string>());
  BigInt den(j.at("den").get<std::string>());
  return Rational(num, den);
}

// Accepts "p/q", "p", and plain decimals like "0.35" (converted exactly).
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    BigInt d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(BigInt(std::string(num)), d);
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    auto whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty() || !is_int(frac) || frac[0] == '+' || frac[0] == '-') return std::nullopt;
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) whole.remove_prefix(1);
    if (!whole.empty() && !is_int(whole)) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt value = (whole.empty() ? BigInt(0) : BigInt(std::string(whole))) * scale +
                   BigInt(std::string(frac));
    Rational r(value, scale);
    return neg ? -r : r;
  }
  if (!is_int(text)) return std::nullopt;
  return Rational(BigInt(std::string(text)));
}

// floor(r) as BigInt, correct for negatives.
inline BigInt rational_floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline long long floor_ll(const Rational& r) { return rational_floor(r).convert_to<long long>(); }

}  // namespace extremal
