#pragma once

// Text form of elements and tensors.
//
//   element := term (('+'|'-') term)*      term := [coeff '*'] gen
//   tensor  := tterm (('+'|'-') tterm)*    tterm := [coeff '*'] gen '(x)' gen
//   gen     := 'L[' int ']' | 'M[' int ']' | 'Y[' int ['/2'] ']' | 'c'
//
// The literal "0" denotes the zero element. Printing is canonical (key order,
// unit coefficients omitted), so print(parse(s)) == s for canonical s.

#include "svlie/linear_combination.hpp"

#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace svlie {

/// 1-based position of a rejected token.
struct ParseDiagnostic {
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;
  std::string token;

  std::string str() const {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!token.empty()) out += " near '" + token + "'";
    return out;
  }
};

class ParseError : public std::invalid_argument {
public:
  explicit ParseError(ParseDiagnostic d) : std::invalid_argument(d.str()), diag_(std::move(d)) {}
  const ParseDiagnostic &diagnostic() const { return diag_; }

private:
  ParseDiagnostic diag_;
};

namespace detail {

class LiteralParser {
public:
  LiteralParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  template <std::size_t R> LinearCombination<std::array<BasisIndex, R>> tensor() {
    LinearCombination<std::array<BasisIndex, R>> out;
    sum([&](const Rational &c) {
      std::array<BasisIndex, R> key;
      for (std::size_t i = 0; i < R; ++i) {
        if (i > 0) expect("(x)");
        key[i] = gen();
      }
      out.add(key, c);
    });
    return out;
  }

  Element element() {
    Element out;
    sum([&](const Rational &c) { out.add(gen(), c); });
    return out;
  }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::string message, std::size_t at, std::size_t len = 1) const {
    std::string token(text_.substr(std::min(at, text_.size()), len));
    if (at >= text_.size()) token = "<end>";
    throw ParseError({line_, at + 1, std::move(message), std::move(token)});
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool accept(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'", pos_);
  }

  std::size_t span_of_word(std::size_t at) const {
    std::size_t e = at;
    while (e < text_.size() && !std::isspace(static_cast<unsigned char>(text_[e]))) ++e;
    return std::max<std::size_t>(e - at, 1);
  }

  // [sign] digits ['/' digits]; the sign is handled by the caller.
  std::optional<Rational> unsigned_rational() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("missing denominator", start, pos_ - start);
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      fail("decimal coefficients are not exact; use p/q", start, span_of_word(start));
    auto q = try_parse_rational(text_.substr(start, pos_ - start));
    if (!q) fail("zero denominator", start, pos_ - start);
    return q;
  }

  // Index inside brackets: an integer, or an odd numerator over 2 for Y.
  int index_dd(Kind k) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t dstart = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == dstart) fail("expected an index", start);
    std::size_t end_num = pos_;
    std::optional<std::string_view> den;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t ds = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == ds) fail("missing denominator", start, pos_ - start);
      den = text_.substr(ds, pos_ - ds);
    }
    std::string_view lit = text_.substr(start, pos_ - start);
    long long num = 0;
    try {
      num = std::stoll(std::string(text_.substr(start, end_num - start)));
    } catch (const std::out_of_range &) {
      fail("index out of range", start, lit.size());
    }
    if (num > 1000000 || num < -1000000) fail("index out of range", start, lit.size());
    if (!den) return static_cast<int>(2 * num);
    if (k != Kind::Y) fail(std::string(1, kind_char(k)) + " indices must be integers", start, lit.size());
    if (*den != "2") fail("only halves are allowed as fractional indices", start, lit.size());
    if (num % 2 == 0) fail("half-integer index must have an odd numerator", start, lit.size());
    return static_cast<int>(num);
  }

  BasisIndex gen() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("expected a generator", pos_);
    char ch = text_[pos_];
    Kind k;
    switch (ch) {
    case 'L': k = Kind::L; break;
    case 'M': k = Kind::M; break;
    case 'Y': k = Kind::Y; break;
    case 'c':
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        fail("unknown generator", start, span_of_word(start));
      return central();
    default: fail("unknown generator", start, span_of_word(start));
    }
    ++pos_;
    if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '[' after generator name", pos_);
    ++pos_;
    int dd = index_dd(k);
    expect("]");
    return {k, dd};
  }

  // Signed terms joined by '+'/'-'; the first term may carry a bare sign.
  template <class TermFn> void sum(TermFn &&term) {
    if (at_end()) fail("empty literal", pos_);
    {
      std::size_t save = pos_;
      if (accept("0") && at_end()) return;
      pos_ = save;
    }
    bool first = true;
    while (true) {
      Rational sign(1);
      if (!first) {
        if (accept("+")) {
        } else if (accept("-")) {
          sign = -1;
        } else {
          fail("expected '+' or '-'", pos_, span_of_word(pos_));
        }
      }
      // coefficient may carry its own sign
      if (accept("-")) {
        sign = -sign;
      } else if (first) {
        accept("+");
      }
      skip_ws();
      std::size_t cstart = pos_;
      Rational coeff(1);
      if (auto q = unsigned_rational()) {
        coeff = *q;
        if (!accept("*")) fail("expected '*' after coefficient", pos_, span_of_word(pos_));
      } else {
        pos_ = cstart;
      }
      term(sign * coeff);
      first = false;
      if (at_end()) return;
    }
  }
};

inline std::string format_coeff_term(const Rational &c, const std::string &body, bool first) {
  std::string out;
  Rational mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag != 1) out += to_string(mag) + "*";
  return out + body;
}

inline std::string key_text(const BasisIndex &b) { return to_string(b); }
template <std::size_t R> std::string key_text(const std::array<BasisIndex, R> &k) {
  std::string out;
  for (std::size_t i = 0; i < R; ++i) {
    if (i > 0) out += " (x) ";
    out += to_string(k[i]);
  }
  return out;
}

} // namespace detail

/// Parses one element literal; `line` only labels diagnostics.
inline Element parse_element(std::string_view text, std::size_t line = 1) {
  return detail::LiteralParser(text, line).element();
}

inline Tensor2 parse_tensor2(std::string_view text, std::size_t line = 1) {
  return detail::LiteralParser(text, line).tensor<2>();
}

inline Tensor3 parse_tensor3(std::string_view text, std::size_t line = 1) {
  return detail::LiteralParser(text, line).tensor<3>();
}

/// r-matrix file: one or more tensor terms per line; blank lines and '#'
/// comments are ignored. Terms on different lines are summed.
inline Tensor2 parse_rmatrix(std::istream &in) {
  Tensor2 out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out += parse_tensor2(line, no);
  }
  return out;
}

inline Tensor2 parse_rmatrix_text(const std::string &text) {
  std::istringstream in(text);
  return parse_rmatrix(in);
}

template <class Key> std::string format(const LinearCombination<Key> &x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[k, c] : x) {
    out += detail::format_coeff_term(c, detail::key_text(k), first);
    first = false;
  }
  return out;
}

/// One term per line, the r-matrix file layout.
inline std::string format_rmatrix(const Tensor2 &r) {
  std::string out;
  for (const auto &[k, c] : r) out += to_string(c) + " * " + detail::key_text(k) + "\n";
  return out;
}

} // namespace svlie
