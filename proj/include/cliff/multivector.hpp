#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "cliff/blade.hpp"
#include "cliff/detail/format.hpp"
#include "cliff/error.hpp"
#include "cliff/rational.hpp"

namespace cliff {

/// Element of R_{0,m}: a sparse sum of blades with exact coefficients.
/// Zero coefficients are never stored, so structural and semantic equality
/// coincide.
class Multivector {
 public:
  using Terms = std::map<Mask, Rational, BladeOrder>;

  explicit Multivector(int dim = 1) : dim_(dim) { check_dim(dim); }

  static Multivector scalar(int dim, const Rational& value) {
    Multivector out(dim);
    out.add_term(0, value);
    return out;
  }

  static Multivector blade(const BladeIndex& b, const Rational& value = 1) {
    Multivector out(b.dim);
    out.add_term(b.mask, value);
    return out;
  }

  /// Generator e_j, 1-based.
  static Multivector basis_vector(int dim, int j) {
    return blade(BladeIndex::from_indices({j}, dim));
  }

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Mask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational scalar_part() const { return coefficient(0); }

  void add_term(Mask mask, const Rational& value) {
    if (dim_ < 32 && (mask >> dim_) != 0)
      throw PreconditionError("blade outside R_{0," + std::to_string(dim_) + "}");
    if (is_zero_value(value)) return;
    auto [it, inserted] = terms_.try_emplace(mask, value);
    if (!inserted) {
      it->second += value;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& other) {
    require_same_dim(other, "addition");
    for (const auto& [mask, c] : other.terms_) add_term(mask, c);
    return *this;
  }

  Multivector& operator-=(const Multivector& other) {
    require_same_dim(other, "subtraction");
    for (const auto& [mask, c] : other.terms_) add_term(mask, -c);
    return *this;
  }

  Multivector& operator*=(const Rational& s) {
    if (is_zero_value(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [mask, c] : terms_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= Rational(-1); }
  friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
  friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }

  /// Geometric (Clifford) product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.require_same_dim(b, "product");
    Multivector out(a.dim_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Rational c = ca * cb;
        if (blade_sign(ma, mb) < 0) c = -c;
        out.add_term(ma ^ mb, c);
      }
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Grade of a homogeneous element; nullopt for zero or mixed grades.
  std::optional<int> pure_grade() const {
    if (terms_.empty()) return std::nullopt;
    const int g = grade(terms_.begin()->first);
    for (const auto& [mask, c] : terms_)
      if (grade(mask) != g) return std::nullopt;
    return g;
  }

  bool is_grade(int k) const {
    for (const auto& [mask, c] : terms_)
      if (grade(mask) != k) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mask, c] : terms_) detail::append_term(out, c, blade_name(mask));
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Multivector& a) {
    return os << a.to_string();
  }

 private:
  static bool is_zero_value(const Rational& r) { return sgn(r) == 0; }

  void require_same_dim(const Multivector& other, const char* what) const {
    if (dim_ != other.dim_)
      throw DimensionMismatch(std::string("multivector ") + what + ": dims " +
                              std::to_string(dim_) + " and " + std::to_string(other.dim_));
  }

  int dim_;
  Terms terms_;
};

inline Multivector mv_mul(const Multivector& a, const Multivector& b) { return a * b; }

/// [a]_k; zero for k outside 0..m.
inline Multivector grade_project(const Multivector& a, int k) {
  Multivector out(a.dim());
  for (const auto& [mask, c] : a.terms())
    if (grade(mask) == k) out.add_term(mask, c);
  return out;
}

inline Multivector conjugate(const Multivector& a) {
  Multivector out(a.dim());
  for (const auto& [mask, c] : a.terms())
    out.add_term(mask, conjugation_sign(mask) < 0 ? Rational(-c) : c);
  return out;
}

/// |a|^2 as the coefficient-square sum.
inline Rational norm_sq(const Multivector& a) {
  Rational s = 0;
  for (const auto& [mask, c] : a.terms()) s += c * c;
  return s;
}

/// sum_j e_j a e_j; acts on grade k as (-1)^k (2k - m).
inline Multivector generator_sandwich_sum(const Multivector& a) {
  Multivector out(a.dim());
  for (int j = 1; j <= a.dim(); ++j) {
    const Multivector ej = Multivector::basis_vector(a.dim(), j);
    out += ej * a * ej;
  }
  return out;
}

namespace detail {

inline void require_vector(const Multivector& x, const char* what) {
  if (!x.is_grade(1)) throw PreconditionError(std::string(what) + ": operand is not a 1-vector");
}

inline int require_homogeneous(const Multivector& y, const char* what) {
  if (y.is_zero()) return 0;
  auto g = y.pure_grade();
  if (!g) throw PreconditionError(std::string(what) + ": operand has mixed grades");
  return *g;
}

}  // namespace detail

/// x . Y_k = [x Y_k]_{k-1}, zero for k = 0.
inline Multivector vector_inner(const Multivector& x, const Multivector& y) {
  detail::require_vector(x, "vector_inner");
  const int k = detail::require_homogeneous(y, "vector_inner");
  if (k == 0) return Multivector(x.dim());
  return grade_project(x * y, k - 1);
}

/// x ^ Y_k = [x Y_k]_{k+1}
inline Multivector vector_outer(const Multivector& x, const Multivector& y) {
  detail::require_vector(x, "vector_outer");
  const int k = detail::require_homogeneous(y, "vector_outer");
  return grade_project(x * y, k + 1);
}

/// Y_k . x = [Y_k x]_{k-1}
inline Multivector vector_inner_right(const Multivector& y, const Multivector& x) {
  detail::require_vector(x, "vector_inner_right");
  const int k = detail::require_homogeneous(y, "vector_inner_right");
  if (k == 0) return Multivector(x.dim());
  return grade_project(y * x, k - 1);
}

/// Y_k ^ x = [Y_k x]_{k+1}
inline Multivector vector_outer_right(const Multivector& y, const Multivector& x) {
  detail::require_vector(x, "vector_outer_right");
  const int k = detail::require_homogeneous(y, "vector_outer_right");
  return grade_project(y * x, k + 1);
}

}  // namespace cliff
