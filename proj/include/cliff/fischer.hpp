#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliff/basis.hpp"
#include "cliff/dirac.hpp"
#include "cliff/error.hpp"
#include "cliff/linalg.hpp"
#include "cliff/polynomial.hpp"

namespace cliff {

namespace detail {

inline int require_homogeneous(const CliffordPolynomial& p, std::optional<int> k, const char* what) {
  if (k) {
    if (!p.is_homogeneous(*k))
      throw PreconditionError(std::string(what) + ": input is not homogeneous of degree " + std::to_string(*k));
    return *k;
  }
  if (p.is_zero()) throw PreconditionError(std::string(what) + ": degree of the zero polynomial must be given");
  auto d = p.homogeneous_degree();
  if (!d) throw PreconditionError(std::string(what) + ": input is not homogeneous");
  return *d;
}

inline Integer factorial_multi(const Monomial& mono) {
  Integer out = 1;
  for (int a : mono.exponents)
    for (int i = 2; i <= a; ++i) out *= i;
  return out;
}

// Zero is homogeneous of every degree.
inline void require_same_degree(const CliffordPolynomial& p, const CliffordPolynomial& q, const char* what) {
  if (p.dim() != q.dim()) throw DimensionMismatch(std::string(what) + ": dimension mismatch");
  std::optional<int> dp, dq;
  if (!p.is_zero() && !(dp = p.homogeneous_degree()))
    throw PreconditionError(std::string(what) + ": first input is not homogeneous");
  if (!q.is_zero() && !(dq = q.homogeneous_degree()))
    throw PreconditionError(std::string(what) + ": second input is not homogeneous");
  if (dp && dq && *dp != *dq) throw PreconditionError(std::string(what) + ": degrees differ");
}

}  // namespace detail

/// <P, Q>_k = [conj(P(d)) Q]_0 through the closed form
/// <a x^alpha, b x^beta> = delta_{alpha beta} alpha! [conj(a) b]_0.
inline Rational fischer_inner(const CliffordPolynomial& p, const CliffordPolynomial& q) {
  detail::require_same_degree(p, q, "fischer_inner");
  const auto& small = p.terms().size() <= q.terms().size() ? p : q;
  const auto& large = &small == &p ? q : p;
  Rational s = 0;
  for (const auto& [mono, a] : small.terms()) {
    auto it = large.terms().find(mono);
    if (it == large.terms().end()) continue;
    const Multivector& pa = &small == &p ? a : it->second;
    const Multivector& qb = &small == &p ? it->second : a;
    s += Rational(detail::factorial_multi(mono)) * (conjugate(pa) * qb).scalar_part();
  }
  return s;
}

/// The same pairing by literally applying the operator conj(P(d)) to Q.
inline Rational fischer_inner_differential(const CliffordPolynomial& p, const CliffordPolynomial& q) {
  detail::require_same_degree(p, q, "fischer_inner_differential");
  const int m = p.dim();
  CliffordPolynomial acc(m);
  for (const auto& [mono, a] : p.terms()) {
    CliffordPolynomial d = q;
    for (int j = 1; j <= m; ++j)
      for (int r = 0; r < mono.exponents[static_cast<std::size_t>(j - 1)]; ++r) d = partial(d, j);
    acc += poly_mul_mv_left(d, conjugate(a));
  }
  for (const auto& [mono, a] : acc.terms())
    if (mono.degree() != 0) throw InternalError("fischer_inner_differential: non-constant remainder");
  return acc.coefficient(Monomial::one(m)).scalar_part();
}

struct AdjointReport {
  std::optional<bool> left;      // <x P, Q> = -<P, d Q>
  std::optional<bool> right;     // <P x, Q> = -<P, Q d>
  std::optional<bool> sandwich;  // <x P x, Q> = <P, d Q d>

  bool all_hold() const { return left.value_or(true) && right.value_or(true) && sandwich.value_or(true); }
};

/// P of degree k-1 checks the two one-sided relations; degree k-2 checks the
/// two-sided one. Q has degree k.
inline AdjointReport adjoint_checks(const CliffordPolynomial& p, int p_degree, const CliffordPolynomial& q,
                                    int q_degree) {
  detail::require_homogeneous(p, p_degree, "adjoint_checks");
  detail::require_homogeneous(q, q_degree, "adjoint_checks");
  AdjointReport r;
  if (p_degree == q_degree - 1) {
    r.left = fischer_inner(mul_by_x_left(p), q) == -fischer_inner(p, dirac_left(q));
    r.right = fischer_inner(mul_by_x_right(p), q) == -fischer_inner(p, dirac_right(q));
  } else if (p_degree == q_degree - 2) {
    r.sandwich = fischer_inner(mul_by_x_both(p), q) == fischer_inner(p, sandwich(q));
  } else {
    throw PreconditionError("adjoint_checks: P must have degree deg(Q)-1 or deg(Q)-2");
  }
  return r;
}

inline std::vector<CliffordPolynomial> stack_one(CliffordPolynomial p) {
  std::vector<CliffordPolynomial> out;
  out.push_back(std::move(p));
  return out;
}

/// S: P(k) -> P(k-2), S(P) = d P d, in the basis order of PolyBasis.
inline Matrix sandwich_matrix(int m, int k) {
  if (k < 2) throw PreconditionError("sandwich_matrix: k must be at least 2");
  return operator_matrix(PolyBasis(m, k), {PolyBasis(m, k - 2)},
                         [](const CliffordPolynomial& p) { return stack_one(sandwich(p)); });
}

/// T: P(k-2) -> P(k), T(Q) = x Q x.
inline Matrix embed_matrix(int m, int k) {
  if (k < 2) throw PreconditionError("embed_matrix: k must be at least 2");
  return operator_matrix(PolyBasis(m, k - 2), {PolyBasis(m, k)},
                         [](const CliffordPolynomial& p) { return stack_one(mul_by_x_both(p)); });
}

/// Per-(m, k) data for the decomposition of P(k): S∘T in parity blocks and
/// the images x Q' x of the P(k-2) basis.
struct FischerOperators {
  int m, k;
  PolyBasis lower;
  BlockedOperator st;
  std::vector<CliffordPolynomial> embedded_basis;

  FischerOperators(int m_, int k_)
      : m(m_),
        k(k_),
        lower(m_, k_ - 2),
        st(lower, {lower}, [](const CliffordPolynomial& q) { return stack_one(sandwich(mul_by_x_both(q))); }) {
    if (st.rank() != lower.size())
      throw InternalError("S∘T is singular for m=" + std::to_string(m) + ", k=" + std::to_string(k));
    embedded_basis.reserve(lower.size());
    for (std::size_t i = 0; i < lower.size(); ++i) embedded_basis.push_back(mul_by_x_both(lower.element(i)));
  }
};

/// Write-once cache; concurrent readers share immutable entries.
inline std::shared_ptr<const FischerOperators> fischer_operators(int m, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const FischerOperators>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{m, k}];
  if (!slot) slot = std::make_shared<const FischerOperators>(m, k);
  return slot;
}

struct DecompositionChecks {
  bool reconstruction = false;
  bool sandwich_zero = false;
  bool orthogonal = false;

  bool all() const { return reconstruction && sandwich_zero && orthogonal; }
};

/// input = infra + x quotient x with sandwich(infra) = 0.
struct DecompositionResult {
  int m = 1, k = 0;
  CliffordPolynomial input, infra, quotient;
  DecompositionChecks checks;

  bool residual_check() const { return checks.all(); }
};

/// <I, x Q' x> = 0 for every basis element Q' of P(k-2).
inline bool orthogonal_to_embedded(const CliffordPolynomial& infra, int k) {
  if (k < 2) return true;
  const auto ops = fischer_operators(infra.dim(), k);
  for (const auto& t : ops->embedded_basis)
    if (sgn(fischer_inner(t, infra)) != 0) return false;
  return true;
}

/// Splits a degree-k polynomial as I + x Q x with I inframonogenic, by
/// solving (S∘T) Q = S(P) exactly on P(k-2). For k < 2 everything is
/// inframonogenic and Q = 0. `k` is required only for the zero polynomial.
inline DecompositionResult fischer_decompose(const CliffordPolynomial& p, std::optional<int> degree = std::nullopt) {
  const int k = detail::require_homogeneous(p, degree, "fischer_decompose");
  const int m = p.dim();
  DecompositionResult r{m, k, p, p, CliffordPolynomial(m), {}};
  if (k >= 2) {
    const auto ops = fischer_operators(m, k);
    const Vector rhs = ops->lower.coordinates(sandwich(p));
    Vector q;
    try {
      q = ops->st.solve(rhs);
    } catch (const SingularMatrix& e) {
      throw InternalError(std::string("fischer_decompose: ") + e.what());
    }
    r.quotient = ops->lower.from_coordinates(q);
    r.infra = p - mul_by_x_both(r.quotient);
  }
  r.checks.reconstruction = r.infra + mul_by_x_both(r.quotient) == p;
  r.checks.sandwich_zero = is_inframonogenic(r.infra);
  r.checks.orthogonal = orthogonal_to_embedded(r.infra, k);
  if (!r.checks.all()) throw InternalError("fischer_decompose: result failed its own checks");
  return r;
}

struct TowerLayer {
  int s = 0;
  CliffordPolynomial infra;
};

/// P = sum_s x^s I_{k-2s} x^s
struct FischerTower {
  int m = 1, k = 0;
  std::vector<TowerLayer> layers;

  CliffordPolynomial reconstruct() const {
    CliffordPolynomial out(m);
    for (const auto& layer : layers) out += mul_by_x_power_both(layer.infra, layer.s);
    return out;
  }
};

inline FischerTower fischer_tower(const CliffordPolynomial& p, std::optional<int> degree = std::nullopt) {
  const int k = detail::require_homogeneous(p, degree, "fischer_tower");
  FischerTower t{p.dim(), k, {}};
  CliffordPolynomial rest = p;
  for (int s = 0; s <= k / 2; ++s) {
    DecompositionResult d = fischer_decompose(rest, k - 2 * s);
    t.layers.push_back({s, std::move(d.infra)});
    rest = std::move(d.quotient);
  }
  if (!rest.is_zero()) throw InternalError("fischer_tower: non-zero remainder below degree 0");
  return t;
}

/// h = f1 + x f2 with f1, f2 left monogenic.
struct AlmansiSplit {
  CliffordPolynomial f1, f2;
};

/// For harmonic homogeneous h of degree k: d(x f2) = -(m + 2E) f2 and E acts
/// as k-1 on f2, so f2 = -d h / (m + 2k - 2) and f1 = h - x f2.
inline AlmansiSplit almansi_split(const CliffordPolynomial& h, std::optional<int> degree = std::nullopt) {
  const int k = detail::require_homogeneous(h, degree, "almansi_split");
  if (!is_harmonic(h)) throw PreconditionError("almansi_split: input is not harmonic");
  const int m = h.dim();
  AlmansiSplit out{h, CliffordPolynomial(m)};
  if (k >= 1) {
    out.f2 = dirac_left(h) * Rational(-1, static_cast<unsigned>(m + 2 * k - 2));
    out.f1 = h - mul_by_x_left(out.f2);
  }
  if (!is_left_monogenic(out.f1) || !is_left_monogenic(out.f2))
    throw InternalError("almansi_split: parts are not left monogenic");
  return out;
}

/// d h = -m f2 - 2 E f2
inline bool almansi_dirac_identity(const CliffordPolynomial& h, const AlmansiSplit& s) {
  return dirac_left(h) == Rational(-h.dim()) * s.f2 - Rational(2) * euler(s.f2);
}

struct HarmonicInfraReport {
  AlmansiSplit split;
  bool inframonogenic = false;          // sandwich(h) = 0
  bool weighted_f2_right_monogenic = false;  // ((m + 2k - 2) f2) d = 0
  bool f2_two_sided = false;
  bool f1_left = false;

  bool verdicts_agree() const { return inframonogenic == weighted_f2_right_monogenic; }
  /// When h is inframonogenic, f2 must be two-sided monogenic and f1 left monogenic.
  bool refinement_holds() const { return !inframonogenic || (f2_two_sided && f1_left); }
};

inline HarmonicInfraReport harmonic_inframonogenic_analysis(const CliffordPolynomial& h,
                                                            std::optional<int> degree = std::nullopt) {
  const int k = detail::require_homogeneous(h, degree, "harmonic_inframonogenic_analysis");
  HarmonicInfraReport r{almansi_split(h, k)};
  const int m = h.dim();
  r.inframonogenic = is_inframonogenic(h);
  r.weighted_f2_right_monogenic = is_right_monogenic(r.split.f2 * Rational(m + 2 * k - 2));
  r.f2_two_sided = is_two_sided_monogenic(r.split.f2);
  r.f1_left = is_left_monogenic(r.split.f1);
  return r;
}

}  // namespace cliff
