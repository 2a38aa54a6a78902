#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "cliff/basis.hpp"
#include "cliff/dirac.hpp"
#include "cliff/polynomial.hpp"

namespace cliff {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return make_rational(num(rng), den(rng));
}

/// Up to `terms` random blades (of one grade, if given) with small rational
/// coefficients.
inline Multivector random_multivector(int m, Rng& rng, int terms, std::optional<int> blade_grade = std::nullopt) {
  std::vector<Mask> pool;
  for (Mask b : blade_basis(m))
    if (!blade_grade || grade(b) == *blade_grade) pool.push_back(b);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Multivector out(m);
  for (int i = 0; i < terms; ++i) out.add_term(pool[pick(rng)], random_rational(rng));
  return out;
}

/// Random homogeneous degree-k polynomial with roughly `terms` monomials.
inline CliffordPolynomial random_polynomial(int m, int k, Rng& rng, int terms,
                                            std::optional<int> blade_grade = std::nullopt, int blades_per_term = 2) {
  const auto monos = monomial_basis(m, k);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  CliffordPolynomial out(m);
  for (int i = 0; i < terms; ++i)
    out.add_term(monos[pick(rng)], random_multivector(m, rng, blades_per_term, blade_grade));
  return out;
}

enum class KernelKind { Inframonogenic, LeftMonogenic, RightMonogenic, TwoSidedMonogenic, Harmonic, HarmonicInframonogenic };

/// Exact kernel of one of the differential operators on P(k) (optionally
/// restricted to one coefficient grade), with seeded random sampling of
/// kernel elements.
class KernelSampler {
 public:
  KernelSampler(int m, int k, KernelKind kind, std::optional<int> blade_grade = std::nullopt)
      : m_(m), k_(k), domain_(m, k, blade_grade) {
    std::vector<PolyBasis> codomain;
    StackedOperator op;
    switch (kind) {
      case KernelKind::Inframonogenic:
        codomain = {PolyBasis(m, k - 2)};
        op = [](const CliffordPolynomial& p) { return std::vector{sandwich(p)}; };
        break;
      case KernelKind::LeftMonogenic:
        codomain = {PolyBasis(m, k - 1)};
        op = [](const CliffordPolynomial& p) { return std::vector{dirac_left(p)}; };
        break;
      case KernelKind::RightMonogenic:
        codomain = {PolyBasis(m, k - 1)};
        op = [](const CliffordPolynomial& p) { return std::vector{dirac_right(p)}; };
        break;
      case KernelKind::TwoSidedMonogenic:
        codomain = {PolyBasis(m, k - 1), PolyBasis(m, k - 1)};
        op = [](const CliffordPolynomial& p) { return std::vector{dirac_left(p), dirac_right(p)}; };
        break;
      case KernelKind::Harmonic:
        codomain = {PolyBasis(m, k - 2)};
        op = [](const CliffordPolynomial& p) { return std::vector{laplacian(p)}; };
        break;
      case KernelKind::HarmonicInframonogenic:
        codomain = {PolyBasis(m, k - 2), PolyBasis(m, k - 2)};
        op = [](const CliffordPolynomial& p) { return std::vector{laplacian(p), sandwich(p)}; };
        break;
    }
    basis_ = BlockedOperator(domain_, codomain, op).kernel();
  }

  int dim() const { return m_; }
  int degree() const { return k_; }
  std::size_t kernel_dim() const { return basis_.size(); }

  CliffordPolynomial basis_element(std::size_t i) const { return domain_.from_coordinates(basis_.at(i)); }

  /// Random rational combination of the kernel basis; zero only when the
  /// kernel is trivial.
  CliffordPolynomial sample(Rng& rng) const {
    if (basis_.empty()) return CliffordPolynomial(m_);
    std::uniform_int_distribution<int> coef(-3, 3), den(1, 3);
    // Sparse combinations keep coefficients readable in large kernels.
    std::uniform_int_distribution<std::size_t> pick(0, basis_.size() - 1);
    const std::size_t picks = std::min<std::size_t>(basis_.size(), 6);
    for (;;) {
      Vector v(domain_.size());
      for (std::size_t t = 0; t < picks; ++t) {
        const Rational c = make_rational(coef(rng), den(rng));
        if (sgn(c) == 0) continue;
        const Vector& b = basis_[basis_.size() <= 6 ? t : pick(rng)];
        for (std::size_t i = 0; i < v.size(); ++i)
          if (sgn(b[i]) != 0) v[i] += c * b[i];
      }
      CliffordPolynomial p = domain_.from_coordinates(v);
      if (!p.is_zero()) return p;
    }
  }

 private:
  int m_, k_;
  PolyBasis domain_;
  std::vector<Vector> basis_;
};

/// Seeded generators for kernel-sampled homogeneous polynomials of degree k.
class RandomProjectors {
 public:
  RandomProjectors(int m, int k, std::uint64_t seed) : m_(m), k_(k), rng_(seed) {}

  CliffordPolynomial inframonogenic() { return draw(KernelKind::Inframonogenic); }
  CliffordPolynomial left_monogenic() { return draw(KernelKind::LeftMonogenic); }
  CliffordPolynomial right_monogenic() { return draw(KernelKind::RightMonogenic); }
  CliffordPolynomial two_sided_monogenic() { return draw(KernelKind::TwoSidedMonogenic); }
  CliffordPolynomial harmonic() { return draw(KernelKind::Harmonic); }

  const KernelSampler& sampler(KernelKind kind) {
    auto& slot = samplers_[static_cast<std::size_t>(kind)];
    if (!slot) slot = std::make_unique<KernelSampler>(m_, k_, kind);
    return *slot;
  }

 private:
  CliffordPolynomial draw(KernelKind kind) { return sampler(kind).sample(rng_); }

  int m_, k_;
  Rng rng_;
  std::unique_ptr<KernelSampler> samplers_[6];
};

inline RandomProjectors random_projectors(int m, int k, std::uint64_t seed) { return RandomProjectors(m, k, seed); }

}  // namespace cliff
