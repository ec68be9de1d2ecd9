#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace svlie {

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. GMP arithmetic assumes canonical operands, so
/// every two-argument construction goes through here.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Strict rational literal: optional sign, digits, optional "/digits".
/// Decimal points and exponents are rejected so every input stays exact.
inline std::optional<Rational> try_parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::string &out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i]);
      ++i;
    }
    return i > start;
  };
  std::string num;
  std::string den = "1";
  if (!digits(num)) return std::nullopt;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    if (!digits(den)) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  Integer d(den);
  if (d == 0) return std::nullopt;
  Rational q(Integer(num), d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

inline Rational parse_rational(std::string_view text) {
  auto q = try_parse_rational(text);
  if (!q) throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  return *q;
}

inline std::string to_string(const Rational &q) { return q.get_str(); }

/// A degree in (1/2)Z stored as its double.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
  static constexpr HalfInt integer(int n) { return HalfInt{2 * n}; }

  bool is_integer() const { return twice % 2 == 0; }
  Rational value() const { return ratio(twice, 2); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a) { return {-a.twice}; }
};

inline std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

inline std::optional<HalfInt> try_parse_half_int(std::string_view text) {
  auto q = try_parse_rational(text);
  if (!q) return std::nullopt;
  Rational twice = *q * 2;
  if (twice.get_den() != 1 || !twice.get_num().fits_sint_p()) return std::nullopt;
  return HalfInt{static_cast<int>(twice.get_num().get_si())};
}

inline HalfInt parse_half_int(std::string_view text) {
  auto h = try_parse_half_int(text);
  if (!h) throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
  return *h;
}

} // namespace svlie
