#pragma once

#include <array>
#include <string>
#include <vector>

#include "cliff/error.hpp"
#include "cliff/multivector.hpp"
#include "cliff/polynomial.hpp"

namespace cliff {

enum class Side { Left, Right, Both };

/// sum_j e_j d_j p
inline CliffordPolynomial dirac_left(const CliffordPolynomial& p) {
  CliffordPolynomial out(p.dim());
  for (int j = 1; j <= p.dim(); ++j)
    out += poly_mul_mv_left(partial(p, j), Multivector::basis_vector(p.dim(), j));
  return out;
}

/// sum_j (d_j p) e_j
inline CliffordPolynomial dirac_right(const CliffordPolynomial& p) {
  CliffordPolynomial out(p.dim());
  for (int j = 1; j <= p.dim(); ++j)
    out += poly_mul_mv_right(partial(p, j), Multivector::basis_vector(p.dim(), j));
  return out;
}

inline CliffordPolynomial dirac_power(CliffordPolynomial p, int k, Side side) {
  for (int i = 0; i < k; ++i) p = side == Side::Right ? dirac_right(p) : dirac_left(p);
  return p;
}

/// d p d, the inframonogenic operator.
inline CliffordPolynomial sandwich(const CliffordPolynomial& p) { return dirac_left(dirac_right(p)); }

/// sum_{i,j} e_i (d_i d_j p) e_j, expanded term by term. Independent of the
/// Dirac compositions; used to cross-check them.
inline CliffordPolynomial sandwich_expanded(const CliffordPolynomial& p) {
  const int m = p.dim();
  CliffordPolynomial out(m);
  for (int i = 1; i <= m; ++i) {
    const Multivector ei = Multivector::basis_vector(m, i);
    const CliffordPolynomial di = partial(p, i);
    for (int j = 1; j <= m; ++j) {
      const Multivector ej = Multivector::basis_vector(m, j);
      out += poly_mul_mv_right(poly_mul_mv_left(partial(di, j), ei), ej);
    }
  }
  return out;
}

inline CliffordPolynomial laplacian(const CliffordPolynomial& p) {
  CliffordPolynomial out(p.dim());
  for (int j = 1; j <= p.dim(); ++j) out += partial(partial(p, j), j);
  return out;
}

inline bool is_left_monogenic(const CliffordPolynomial& p) { return dirac_left(p).is_zero(); }
inline bool is_right_monogenic(const CliffordPolynomial& p) { return dirac_right(p).is_zero(); }
inline bool is_two_sided_monogenic(const CliffordPolynomial& p) {
  return is_left_monogenic(p) && is_right_monogenic(p);
}
inline bool is_inframonogenic(const CliffordPolynomial& p) { return sandwich(p).is_zero(); }
inline bool is_harmonic(const CliffordPolynomial& p) { return laplacian(p).is_zero(); }
inline bool is_biharmonic(const CliffordPolynomial& p) { return laplacian(laplacian(p)).is_zero(); }

inline bool is_k_monogenic(const CliffordPolynomial& p, int k, Side side) {
  if (side == Side::Both)
    return dirac_power(p, k, Side::Left).is_zero() && dirac_power(p, k, Side::Right).is_zero();
  return dirac_power(p, k, side).is_zero();
}

/// sum_j e_j F e_j
inline CliffordPolynomial conjugate_sum(const CliffordPolynomial& f) {
  CliffordPolynomial out(f.dim());
  for (const auto& [mono, c] : f.terms()) out.add_term(mono, generator_sandwich_sum(c));
  return out;
}

/// Eigenvalue (-1)^k (2k - m) of conjugate_sum on k-vectors.
inline int conjugate_sum_eigenvalue(int m, int k) { return (k % 2 ? -1 : 1) * (2 * k - m); }

struct IdentityVerdict {
  std::string name;
  bool holds = false;
};

/// Exact verdicts for the product-rule identities of the sandwich and
/// Laplace operators. Each identity holds for every polynomial f.
inline std::vector<IdentityVerdict> identity_checks(const CliffordPolynomial& f) {
  const int m = f.dim();
  std::vector<IdentityVerdict> out;
  const CliffordPolynomial sf = sandwich(f);

  bool left_ok = true, right_ok = true;
  for (int j = 1; j <= m; ++j) {
    const Multivector ej = Multivector::basis_vector(m, j);
    // d(e_j f)d = -2 d_j (f d) - e_j (d f d)
    const CliffordPolynomial lhs_l = sandwich(poly_mul_mv_left(f, ej));
    const CliffordPolynomial rhs_l =
        Rational(-2) * partial(dirac_right(f), j) - poly_mul_mv_left(sf, ej);
    left_ok = left_ok && lhs_l == rhs_l;
    // d(f e_j)d = -2 d_j (d f) - (d f d) e_j
    const CliffordPolynomial lhs_r = sandwich(poly_mul_mv_right(f, ej));
    const CliffordPolynomial rhs_r =
        Rational(-2) * partial(dirac_left(f), j) - poly_mul_mv_right(sf, ej);
    right_ok = right_ok && lhs_r == rhs_r;
  }
  out.push_back({"sandwich(e_j f) = -2 d_j(f d) - e_j sandwich(f)", left_ok});
  out.push_back({"sandwich(f e_j) = -2 d_j(d f) - sandwich(f) e_j", right_ok});

  const CliffordPolynomial lf = laplacian(f);
  out.push_back({"laplacian(x f) = 2 d f + x laplacian(f)",
                 laplacian(mul_by_x_left(f)) == Rational(2) * dirac_left(f) + mul_by_x_left(lf)});
  out.push_back({"laplacian(f x) = 2 f d + laplacian(f) x",
                 laplacian(mul_by_x_right(f)) == Rational(2) * dirac_right(f) + mul_by_x_right(lf)});
  return out;
}

namespace detail {

// d . G = [d G]_{g-1} and d ^ G = [d G]_{g+1} for G of pure grade g.
inline CliffordPolynomial dirac_inner(const CliffordPolynomial& g, int grade_g) {
  if (grade_g == 0) return CliffordPolynomial(g.dim());
  return grade_project(dirac_left(g), grade_g - 1);
}

inline CliffordPolynomial dirac_outer(const CliffordPolynomial& g, int grade_g) {
  return grade_project(dirac_left(g), grade_g + 1);
}

}  // namespace detail

/// The three graded equations equivalent to the sandwich equation for a
/// k-vector valued F:
///   r0 = d.(d.F),  r1 = d^(d.F) - d.(d^F),  r2 = d^(d^F).
/// r0, r1, r2 equal -(-1)^k, -(-1)^k and (-1)^k times the grade k-2, k,
/// k+2 parts of sandwich(F).
struct KVectorResiduals {
  CliffordPolynomial r0, r1, r2;
};

inline KVectorResiduals kvector_system_residuals(const CliffordPolynomial& f, int k) {
  if (!f.is_grade(k)) throw PreconditionError("kvector_system_residuals: input is not of pure grade " + std::to_string(k));
  const CliffordPolynomial inner = detail::dirac_inner(f, k);
  const CliffordPolynomial outer = detail::dirac_outer(f, k);
  return {detail::dirac_inner(inner, k - 1),
          detail::dirac_outer(inner, k - 1) - detail::dirac_inner(outer, k + 1),
          detail::dirac_outer(outer, k + 1)};
}

inline KVectorResiduals kvector_system_residuals(const CliffordPolynomial& f) {
  if (f.is_zero()) return {CliffordPolynomial(f.dim()), CliffordPolynomial(f.dim()), CliffordPolynomial(f.dim())};
  auto g = f.pure_grade();
  if (!g) throw PreconditionError("kvector_system_residuals: input is not of pure grade");
  return kvector_system_residuals(f, *g);
}

/// f = c x + M (CoefficientLeft) or f = x c + M (CoefficientRight).
enum class CertificateForm { CoefficientLeft, CoefficientRight };

struct LinearSplitCertificate {
  Multivector c;
  CliffordPolynomial monogenic;
  CertificateForm form = CertificateForm::CoefficientLeft;
  /// False when a degenerate grade (2k = m) left c partly undetermined and
  /// the minimal-norm choice (zero there) was taken.
  bool unique = true;
};

namespace detail {

inline Multivector constant_value(const CliffordPolynomial& p, const char* what) {
  const int m = p.dim();
  for (const auto& [mono, c] : p.terms())
    if (mono.degree() != 0) throw PreconditionError(std::string(what) + " is not constant");
  return p.coefficient(Monomial::one(m));
}

}  // namespace detail

/// Splits an inframonogenic polynomial f whose products e_j f (side Left) or
/// f e_j (side Right) are all inframonogenic.
///
/// Side Left: f d is constant C, so c = -C/m gives f = c x + M with M right
/// monogenic.
/// Side Right: d f is constant C. The form c x + M needs sum_j e_j c e_j = C,
/// solved gradewise through the eigenvalues (-1)^k (2k - m). If a grade with
/// 2k = m carries nonzero data, no c exists in that form and the mirrored
/// split f = x c + M with c = -C/m is returned instead.
inline LinearSplitCertificate linear_split_certificate(const CliffordPolynomial& f, Side side) {
  if (side == Side::Both) throw PreconditionError("linear_split_certificate: side must be Left or Right");
  const int m = f.dim();
  if (!is_inframonogenic(f)) throw PreconditionError("linear_split_certificate: f is not inframonogenic");
  for (int j = 1; j <= m; ++j) {
    const Multivector ej = Multivector::basis_vector(m, j);
    const CliffordPolynomial g = side == Side::Left ? poly_mul_mv_left(f, ej) : poly_mul_mv_right(f, ej);
    if (!is_inframonogenic(g))
      throw PreconditionError("linear_split_certificate: e_" + std::to_string(j) + " product is not inframonogenic");
  }
  const CliffordPolynomial x = CliffordPolynomial::vector_variable(m);
  const Rational inv_m = Rational(1, static_cast<unsigned>(m));

  LinearSplitCertificate cert{Multivector(m), CliffordPolynomial(m)};
  if (side == Side::Left) {
    const Multivector constant = detail::constant_value(dirac_right(f), "f d");
    cert.c = constant * Rational(-inv_m);
    cert.form = CertificateForm::CoefficientLeft;
    cert.monogenic = f - poly_mul_mv_left(x, cert.c);
    if (!is_right_monogenic(cert.monogenic)) throw InternalError("linear_split_certificate: M is not right monogenic");
    return cert;
  }

  const Multivector constant = detail::constant_value(dirac_left(f), "d f");
  bool representable = true;
  Multivector c(m);
  for (const auto& [mask, value] : constant.terms()) {
    const int ev = conjugate_sum_eigenvalue(m, grade(mask));
    if (ev == 0) {
      representable = false;
      break;
    }
    c.add_term(mask, value / Rational(ev));
  }
  if (representable) {
    for (int k = 0; k <= m; ++k)
      if (conjugate_sum_eigenvalue(m, k) == 0) cert.unique = false;
    cert.c = c;
    cert.form = CertificateForm::CoefficientLeft;
    cert.monogenic = f - poly_mul_mv_left(x, c);
  } else {
    cert.c = constant * Rational(-inv_m);
    cert.form = CertificateForm::CoefficientRight;
    cert.monogenic = f - poly_mul_mv_right(x, cert.c);
  }
  if (!is_left_monogenic(cert.monogenic)) throw InternalError("linear_split_certificate: M is not left monogenic");
  return cert;
}

/// Four polynomial characterizations of harmonic inframonogenic pure-grade F
/// (equivalent when 2k != m).
struct HarmonicInfraVerdicts {
  bool harmonic_and_inframonogenic = false;
  bool left_cubed_fx = false;       // d^3 (F x) = 0
  bool right_cubed_xf = false;      // (x F) d^3 = 0
  bool bilaplacian_xfx = false;     // Laplacian^2 (x F x) = 0

  bool agree() const {
    return harmonic_and_inframonogenic == left_cubed_fx && left_cubed_fx == right_cubed_xf &&
           right_cubed_xf == bilaplacian_xfx;
  }
};

inline HarmonicInfraVerdicts harmonic_infra_verdicts(const CliffordPolynomial& f) {
  return {is_harmonic(f) && is_inframonogenic(f), dirac_power(mul_by_x_right(f), 3, Side::Left).is_zero(),
          dirac_power(mul_by_x_left(f), 3, Side::Right).is_zero(), laplacian(laplacian(mul_by_x_both(f))).is_zero()};
}

}  // namespace cliff
