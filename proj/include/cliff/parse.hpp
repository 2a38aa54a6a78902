#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cliff/error.hpp"
#include "cliff/polynomial.hpp"

namespace cliff {

namespace detail {

// Term-by-term product; the real variables commute with the coefficients, so
// (a x^alpha)(b x^beta) = (a b) x^(alpha+beta). Parser-internal.
inline CliffordPolynomial product(const CliffordPolynomial& p, const CliffordPolynomial& q) {
  CliffordPolynomial out(p.dim());
  for (const auto& [ma, a] : p.terms())
    for (const auto& [mb, b] : q.terms()) {
      Monomial mono = ma;
      for (std::size_t j = 0; j < mono.exponents.size(); ++j) mono.exponents[j] += mb.exponents[j];
      out.add_term(mono, a * b);
    }
  return out;
}

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, int m) : text_(text), m_(m) { check_dim(m); }

  CliffordPolynomial parse() {
    CliffordPolynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  // expression := ['+'|'-'] term (('+'|'-') term)*
  CliffordPolynomial expression() {
    skip_ws();
    CliffordPolynomial acc(m_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    for (;;) {
      CliffordPolynomial t = term();
      acc += negate ? -t : t;
      skip_ws();
      if (!(peek('+') || peek('-'))) return acc;
      negate = text_[pos_++] == '-';
    }
  }

  // term := factor ('*' factor)*
  CliffordPolynomial term() {
    CliffordPolynomial acc = factor();
    for (;;) {
      skip_ws();
      if (!peek('*')) return acc;
      ++pos_;
      acc = product(acc, factor());
    }
  }

  CliffordPolynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      CliffordPolynomial inner = expression();
      skip_ws();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return power(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == 'x') return variable();
    if (c == 'e') return blade();
    fail(std::string("unexpected '") + c + "'");
  }

  CliffordPolynomial number() {
    Integer num(digits(), 10);
    Integer den = 1;
    skip_ws();
    if (peek('/')) {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      den = Integer(digits(), 10);
      if (den == 0) fail_at("zero denominator", at);
    }
    return CliffordPolynomial::constant(m_, make_rational(num, den));
  }

  CliffordPolynomial variable() {
    const std::size_t at = pos_++;
    const int j = small_int(at);
    if (j < 1 || j > m_) fail_at("index out of range: x" + std::to_string(j) + " with m=" + std::to_string(m_), at);
    return power(CliffordPolynomial::variable(m_, j));
  }

  // e<digits> with one index per digit, or e{i,j,...}; the listed generators
  // are multiplied in order.
  CliffordPolynomial blade() {
    const std::size_t at = pos_++;
    std::vector<int> idx;
    if (peek('{')) {
      ++pos_;
      for (;;) {
        skip_ws();
        idx.push_back(small_int(pos_));
        skip_ws();
        if (peek(',')) {
          ++pos_;
          continue;
        }
        if (!peek('}')) fail("expected ',' or '}'");
        ++pos_;
        break;
      }
    } else {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        idx.push_back(text_[pos_++] - '0');
      if (idx.empty()) fail("expected blade indices after 'e'");
    }
    Multivector a = Multivector::scalar(m_, 1);
    for (int j : idx) {
      if (j < 1 || j > m_) fail_at("index out of range: e" + std::to_string(j) + " with m=" + std::to_string(m_), at);
      a = a * Multivector::basis_vector(m_, j);
    }
    return power(CliffordPolynomial::constant(a));
  }

  CliffordPolynomial power(const CliffordPolynomial& base) {
    skip_ws();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    const int n = small_int(at);
    if (n > 64) fail_at("exponent too large", at);
    CliffordPolynomial out = CliffordPolynomial::constant(m_, 1);
    for (int i = 0; i < n; ++i) out = product(out, base);
    return out;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int(std::size_t at) {
    const std::string d = digits();
    if (d.size() > 6) fail_at("integer too large", at);
    return std::stoi(d);
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  int m_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `3/2*x1^2*x2*e12 - x2 + 5` style input for a given m. Rationals,
/// variables x<i>, blades e<digits> or e{i,j}, `^`, `*`, `+`, `-` and
/// parentheses.
inline CliffordPolynomial parse_polynomial(std::string_view text, int m) {
  return detail::PolynomialParser(text, m).parse();
}

}  // namespace cliff
