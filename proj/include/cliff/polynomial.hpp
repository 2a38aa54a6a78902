#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cliff/error.hpp"
#include "cliff/multivector.hpp"
#include "cliff/rational.hpp"

namespace cliff {

/// x1^a1 ... xm^am
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {
    for (int a : exponents)
      if (a < 0) throw PreconditionError("negative exponent in monomial");
  }

  static Monomial one(int m) { return Monomial(std::vector<int>(static_cast<std::size_t>(m), 0)); }

  /// x_j, 1-based.
  static Monomial variable(int m, int j) {
    Monomial out = one(m);
    out.exponents.at(static_cast<std::size_t>(j - 1)) = 1;
    return out;
  }

  int dim() const { return static_cast<int>(exponents.size()); }
  int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

  /// 1 for the constant monomial.
  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      if (exponents[j] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'x' + std::to_string(j + 1);
      if (exponents[j] > 1) out += '^' + std::to_string(exponents[j]);
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex: lower degree first; within a degree, x1 dominates x2 and so on
/// (x1^2 < x1*x2 < x2^2).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(),
                                        a.exponents.begin(), a.exponents.end());
  }
};

/// All degree-k monomials in m variables, graded-lex.
inline std::vector<Monomial> monomial_basis(int m, int k) {
  check_dim(m);
  if (k < 0) throw PreconditionError("monomial_basis: negative degree");
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  // Recursive stars-and-bars, largest exponent of x1 first.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == m - 1) {
      e[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      e[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, remaining - a);
    }
  };
  rec(rec, 0, k);
  return out;
}

/// C(k+m-1, m-1)
inline std::size_t monomial_count(int m, int k) {
  if (k < 0) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= m - 1; ++i) r = r * static_cast<std::size_t>(k + i) / static_cast<std::size_t>(i);
  return r;
}

/// Real dimension of P(k): monomials times 2^m blades. Zero for k < 0.
inline std::size_t space_dim(int m, int k) {
  check_dim(m);
  return monomial_count(m, k) << m;
}

/// Polynomial in x1..xm with coefficients in R_{0,m}. Each term a*x^alpha
/// stores its multivector coefficient a; the real variables commute with
/// everything so left/right placement of x^alpha is immaterial.
class CliffordPolynomial {
 public:
  using Terms = std::map<Monomial, Multivector, GradedLex>;

  explicit CliffordPolynomial(int dim = 1) : dim_(dim) { check_dim(dim); }

  static CliffordPolynomial constant(const Multivector& a) {
    CliffordPolynomial out(a.dim());
    out.add_term(Monomial::one(a.dim()), a);
    return out;
  }

  static CliffordPolynomial constant(int dim, const Rational& r) {
    return constant(Multivector::scalar(dim, r));
  }

  static CliffordPolynomial term(const Monomial& mono, const Multivector& a) {
    CliffordPolynomial out(a.dim());
    out.add_term(mono, a);
    return out;
  }

  /// The real-valued coordinate x_j.
  static CliffordPolynomial variable(int dim, int j) {
    return term(Monomial::variable(dim, j), Multivector::scalar(dim, 1));
  }

  /// x = sum_j x_j e_j
  static CliffordPolynomial vector_variable(int dim) {
    CliffordPolynomial out(dim);
    for (int j = 1; j <= dim; ++j)
      out.add_term(Monomial::variable(dim, j), Multivector::basis_vector(dim, j));
    return out;
  }

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const Multivector& a) {
    if (mono.dim() != dim_ || a.dim() != dim_)
      throw DimensionMismatch("polynomial term dimension does not match m=" + std::to_string(dim_));
    if (a.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Multivector coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Multivector(dim_) : it->second;
  }

  /// True for the zero polynomial at every k.
  bool is_homogeneous(int k) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [k](const auto& t) { return t.first.degree() == k; });
  }

  /// Common degree of all terms; nullopt for zero or inhomogeneous input.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int k = terms_.begin()->first.degree();
    return is_homogeneous(k) ? std::optional<int>(k) : std::nullopt;
  }

  /// Every coefficient has grade k (true for zero).
  bool is_grade(int k) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [k](const auto& t) { return t.second.is_grade(k); });
  }

  std::optional<int> pure_grade() const {
    if (terms_.empty()) return std::nullopt;
    auto g = terms_.begin()->second.pure_grade();
    if (!g || !is_grade(*g)) return std::nullopt;
    return g;
  }

  CliffordPolynomial& operator+=(const CliffordPolynomial& other) {
    require_same_dim(other);
    for (const auto& [mono, a] : other.terms_) add_term(mono, a);
    return *this;
  }

  CliffordPolynomial& operator-=(const CliffordPolynomial& other) {
    require_same_dim(other);
    for (const auto& [mono, a] : other.terms_) add_term(mono, -a);
    return *this;
  }

  CliffordPolynomial& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, a] : terms_) a *= s;
    return *this;
  }

  friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) { return a += b; }
  friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) { return a -= b; }
  friend CliffordPolynomial operator-(CliffordPolynomial a) { return a *= Rational(-1); }
  friend CliffordPolynomial operator*(CliffordPolynomial a, const Rational& s) { return a *= s; }
  friend CliffordPolynomial operator*(const Rational& s, CliffordPolynomial a) { return a *= s; }

  friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, a] : terms_) {
      const std::string m = mono.to_string();
      for (const auto& [mask, c] : a.terms()) {
        std::string body = m;
        if (mask != 0) {
          if (!body.empty()) body += '*';
          body += blade_name(mask);
        }
        detail::append_term(out, c, body);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const CliffordPolynomial& p) {
    return os << p.to_string();
  }

 private:
  void require_same_dim(const CliffordPolynomial& other) const {
    if (dim_ != other.dim_)
      throw DimensionMismatch("polynomial dims " + std::to_string(dim_) + " and " +
                              std::to_string(other.dim_));
  }

  int dim_;
  Terms terms_;
};

inline CliffordPolynomial poly_add(const CliffordPolynomial& p, const CliffordPolynomial& q) { return p + q; }

inline CliffordPolynomial poly_mul_scalar(const CliffordPolynomial& p, const Rational& s) { return p * s; }

/// a * p, coefficient-wise on the left.
inline CliffordPolynomial poly_mul_mv_left(const CliffordPolynomial& p, const Multivector& a) {
  if (a.dim() != p.dim()) throw DimensionMismatch("poly_mul_mv_left: dimension mismatch");
  CliffordPolynomial out(p.dim());
  for (const auto& [mono, c] : p.terms()) out.add_term(mono, a * c);
  return out;
}

/// p * a, coefficient-wise on the right.
inline CliffordPolynomial poly_mul_mv_right(const CliffordPolynomial& p, const Multivector& a) {
  if (a.dim() != p.dim()) throw DimensionMismatch("poly_mul_mv_right: dimension mismatch");
  CliffordPolynomial out(p.dim());
  for (const auto& [mono, c] : p.terms()) out.add_term(mono, c * a);
  return out;
}

/// Coefficient-wise grade projection [p]_k.
inline CliffordPolynomial grade_project(const CliffordPolynomial& p, int k) {
  CliffordPolynomial out(p.dim());
  for (const auto& [mono, c] : p.terms()) out.add_term(mono, grade_project(c, k));
  return out;
}

/// Formal d/dx_j.
inline CliffordPolynomial partial(const CliffordPolynomial& p, int j) {
  if (j < 1 || j > p.dim())
    throw PreconditionError("partial: axis " + std::to_string(j) + " out of range for m=" +
                            std::to_string(p.dim()));
  const auto idx = static_cast<std::size_t>(j - 1);
  CliffordPolynomial out(p.dim());
  for (const auto& [mono, c] : p.terms()) {
    const int a = mono.exponents[idx];
    if (a == 0) continue;
    Monomial lowered = mono;
    --lowered.exponents[idx];
    out.add_term(lowered, c * Rational(a));
  }
  return out;
}

namespace detail {

inline Monomial raise(const Monomial& mono, int j) {
  Monomial out = mono;
  ++out.exponents[static_cast<std::size_t>(j - 1)];
  return out;
}

}  // namespace detail

/// x p = sum_j x_j e_j p
inline CliffordPolynomial mul_by_x_left(const CliffordPolynomial& p) {
  const int m = p.dim();
  CliffordPolynomial out(m);
  for (int j = 1; j <= m; ++j) {
    const Multivector ej = Multivector::basis_vector(m, j);
    for (const auto& [mono, c] : p.terms()) out.add_term(detail::raise(mono, j), ej * c);
  }
  return out;
}

/// p x = sum_j x_j p e_j
inline CliffordPolynomial mul_by_x_right(const CliffordPolynomial& p) {
  const int m = p.dim();
  CliffordPolynomial out(m);
  for (int j = 1; j <= m; ++j) {
    const Multivector ej = Multivector::basis_vector(m, j);
    for (const auto& [mono, c] : p.terms()) out.add_term(detail::raise(mono, j), c * ej);
  }
  return out;
}

/// x p x
inline CliffordPolynomial mul_by_x_both(const CliffordPolynomial& p) {
  return mul_by_x_right(mul_by_x_left(p));
}

/// x^s p x^s
inline CliffordPolynomial mul_by_x_power_both(CliffordPolynomial p, int s) {
  for (int i = 0; i < s; ++i) p = mul_by_x_both(p);
  return p;
}

/// E = sum_j x_j d/dx_j; scales each monomial by its degree.
inline CliffordPolynomial euler(const CliffordPolynomial& p) {
  CliffordPolynomial out(p.dim());
  for (const auto& [mono, c] : p.terms()) out.add_term(mono, c * Rational(mono.degree()));
  return out;
}

inline Multivector eval(const CliffordPolynomial& p, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != p.dim())
    throw DimensionMismatch("eval: point has " + std::to_string(point.size()) +
                            " coordinates, expected " + std::to_string(p.dim()));
  Multivector out(p.dim());
  for (const auto& [mono, c] : p.terms()) {
    Rational v = 1;
    for (std::size_t j = 0; j < point.size(); ++j)
      for (int a = 0; a < mono.exponents[j]; ++a) v *= point[j];
    out += c * v;
  }
  return out;
}

}  // namespace cliff
