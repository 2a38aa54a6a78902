#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cliff/blade.hpp"
#include "cliff/error.hpp"
#include "cliff/polynomial.hpp"

namespace cliff::numeric {

/// Dense multivector with double coefficients, indexed by blade mask.
class NumericMultivector {
 public:
  explicit NumericMultivector(int dim = 1) : dim_(dim), coef_(std::size_t{1} << dim, 0.0) { check_dim(dim); }

  static NumericMultivector from_exact(const Multivector& a) {
    NumericMultivector out(a.dim());
    for (const auto& [mask, c] : a.terms()) out.coef_[mask] = c.get_d();
    return out;
  }

  int dim() const { return dim_; }
  double& operator[](Mask mask) { return coef_[mask]; }
  double operator[](Mask mask) const { return coef_[mask]; }

  NumericMultivector& operator+=(const NumericMultivector& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
    return *this;
  }
  NumericMultivector& operator-=(const NumericMultivector& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
    return *this;
  }
  NumericMultivector& operator*=(double s) {
    for (double& c : coef_) c *= s;
    return *this;
  }
  friend NumericMultivector operator+(NumericMultivector a, const NumericMultivector& b) { return a += b; }
  friend NumericMultivector operator-(NumericMultivector a, const NumericMultivector& b) { return a -= b; }
  friend NumericMultivector operator*(NumericMultivector a, double s) { return a *= s; }
  friend NumericMultivector operator*(double s, NumericMultivector a) { return a *= s; }

  /// Clifford product with the exact blade sign table.
  friend NumericMultivector operator*(const NumericMultivector& a, const NumericMultivector& b) {
    a.require_same_dim(b);
    NumericMultivector out(a.dim_);
    for (Mask i = 0; i < a.coef_.size(); ++i) {
      if (a.coef_[i] == 0.0) continue;
      for (Mask j = 0; j < b.coef_.size(); ++j) {
        if (b.coef_[j] == 0.0) continue;
        out.coef_[i ^ j] += blade_sign(i, j) * a.coef_[i] * b.coef_[j];
      }
    }
    return out;
  }

  /// Max-abs coefficient.
  double max_norm() const {
    double m = 0.0;
    for (double c : coef_) m = std::max(m, std::abs(c));
    return m;
  }

  bool is_finite() const {
    for (double c : coef_)
      if (!std::isfinite(c)) return false;
    return true;
  }

 private:
  void require_same_dim(const NumericMultivector& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("numeric multivector: dimension mismatch");
  }

  int dim_;
  std::vector<double> coef_;
};

inline NumericMultivector basis_vector(int m, int j) {
  NumericMultivector e(m);
  e[Mask{1} << (j - 1)] = 1.0;
  return e;
}

using Field = std::function<NumericMultivector(std::span<const double>)>;

inline NumericMultivector eval(const CliffordPolynomial& p, std::span<const double> point) {
  if (static_cast<int>(point.size()) != p.dim()) throw DimensionMismatch("numeric eval: wrong point size");
  NumericMultivector out(p.dim());
  for (const auto& [mono, a] : p.terms()) {
    double v = 1.0;
    for (std::size_t j = 0; j < point.size(); ++j) v *= std::pow(point[j], mono.exponents[j]);
    out += NumericMultivector::from_exact(a) * v;
  }
  return out;
}

inline Field as_field(CliffordPolynomial p) {
  return [p = std::move(p)](std::span<const double> x) { return eval(p, x); };
}

/// The m = 2 vector field f1 e1 + f2 e2 with
///   f1 = ((c1 + c2 x1) e^{n x1} + (c3 + c4 x1) e^{-n x1}) cos(n x2)
///   f2 = ((c3 + c4 x1) e^{-n x1} - (c1 + c2 x1) e^{n x1}) sin(n x2)
struct TrigExpFamily {
  double c1 = 0, c2 = 0, c3 = 0, c4 = 0, n = 0;
};

inline NumericMultivector family_eval(const TrigExpFamily& f, double x1, double x2) {
  const double grow = (f.c1 + f.c2 * x1) * std::exp(f.n * x1);
  const double decay = (f.c3 + f.c4 * x1) * std::exp(-f.n * x1);
  NumericMultivector out(2);
  out[0b01] = (grow + decay) * std::cos(f.n * x2);
  out[0b10] = (decay - grow) * std::sin(f.n * x2);
  return out;
}

inline Field as_field(const TrigExpFamily& f) {
  return [f](std::span<const double> x) { return family_eval(f, x[0], x[1]); };
}

/// Central-difference Hessian: 3-point pure and 4-point mixed stencils.
/// Each axis uses the representable step (x_i + h) - x_i so that the
/// stencil points sit exactly symmetric around x_i.
inline std::vector<std::vector<NumericMultivector>> fd_hessian(const Field& f, std::span<const double> point, double h) {
  const std::size_t m = point.size();
  std::vector<double> x(point.begin(), point.end());
  std::vector<double> step(m);
  for (std::size_t i = 0; i < m; ++i) {
    volatile double up = x[i] + h;
    step[i] = up - x[i];
  }
  auto at = [&](std::size_t i, int si, std::size_t j, int sj) {
    std::vector<double> y = x;
    y[i] += si * step[i];
    y[j] += sj * step[j];
    return f(y);
  };
  const NumericMultivector f0 = f(x);
  const int dim = f0.dim();
  std::vector<std::vector<NumericMultivector>> hess(m, std::vector<NumericMultivector>(m, NumericMultivector(dim)));
  for (std::size_t i = 0; i < m; ++i) {
    hess[i][i] = (at(i, 1, i, 0) - 2.0 * f0 + at(i, -1, i, 0)) * (1.0 / (step[i] * step[i]));
    for (std::size_t j = i + 1; j < m; ++j) {
      hess[i][j] = (at(i, 1, j, 1) - at(i, 1, j, -1) - at(i, -1, j, 1) + at(i, -1, j, -1)) *
                   (0.25 / (step[i] * step[j]));
      hess[j][i] = hess[i][j];
    }
  }
  return hess;
}

/// sum_{i,j} e_i H_ij e_j
inline NumericMultivector fd_sandwich(const Field& f, std::span<const double> point, double h) {
  const auto hess = fd_hessian(f, point, h);
  const int m = hess.empty() ? 1 : hess[0][0].dim();
  NumericMultivector out(m);
  for (std::size_t i = 0; i < point.size(); ++i)
    for (std::size_t j = 0; j < point.size(); ++j)
      out += basis_vector(m, static_cast<int>(i) + 1) * hess[i][j] * basis_vector(m, static_cast<int>(j) + 1);
  return out;
}

inline NumericMultivector fd_laplacian(const Field& f, std::span<const double> point, double h) {
  const auto hess = fd_hessian(f, point, h);
  NumericMultivector out(hess.empty() ? 1 : hess[0][0].dim());
  for (std::size_t i = 0; i < point.size(); ++i) out += hess[i][i];
  return out;
}

/// Tensor grid of n x n points covering [lo, hi]^2.
inline std::vector<std::array<double, 2>> square_grid(std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::vector<std::array<double, 2>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double t = n == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(n - 1);
      const double u = n == 1 ? 0.5 : static_cast<double>(j) / static_cast<double>(n - 1);
      out.push_back({lo + t * (hi - lo), lo + u * (hi - lo)});
    }
  return out;
}

inline double max_sandwich_residual(const Field& f, std::span<const std::array<double, 2>> grid, double h) {
  double worst = 0.0;
  for (const auto& p : grid) worst = std::max(worst, fd_sandwich(f, p, h).max_norm());
  return worst;
}

inline double max_laplacian_residual(const Field& f, std::span<const std::array<double, 2>> grid, double h) {
  double worst = 0.0;
  for (const auto& p : grid) worst = std::max(worst, fd_laplacian(f, p, h).max_norm());
  return worst;
}

struct HarmonicityVerdict {
  bool harmonic = false;
  double max_residual = 0.0;
};

inline constexpr double kDefaultStep = 1e-4;
inline constexpr double kResidualTolerance = 1e-6;

inline HarmonicityVerdict family_harmonicity_scan(const TrigExpFamily& f, std::span<const std::array<double, 2>> grid,
                                                  double h = kDefaultStep, double tol = kResidualTolerance) {
  const double r = max_laplacian_residual(as_field(f), grid, h);
  return {r <= tol, r};
}

struct OdeResidual {
  double alpha = 0.0, beta = 0.0;
};

/// alpha'' + n^2 alpha + 2n beta' and beta'' + n^2 beta + 2n alpha' with
/// closed-form derivatives of the family's x1 profiles.
inline OdeResidual ode_system_residual(const TrigExpFamily& f, double x1) {
  const double n = f.n;
  const double ep = std::exp(n * x1), em = std::exp(-n * x1);
  const double u = (f.c1 + f.c2 * x1) * ep;
  const double v = (f.c3 + f.c4 * x1) * em;
  const double du = f.c2 * ep + n * u;
  const double dv = f.c4 * em - n * v;
  const double d2u = 2.0 * n * f.c2 * ep + n * n * u;
  const double d2v = -2.0 * n * f.c4 * em + n * n * v;
  const double alpha = u + v, d_alpha = du + dv, d2_alpha = d2u + d2v;
  const double beta = v - u, d_beta = dv - du, d2_beta = d2v - d2u;
  return {d2_alpha + n * n * alpha + 2.0 * n * d_beta, d2_beta + n * n * beta + 2.0 * n * d_alpha};
}

}  // namespace cliff::numeric
