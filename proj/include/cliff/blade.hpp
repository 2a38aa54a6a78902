#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliff/error.hpp"

#ifndef CLIFF_MAX_DIM
#define CLIFF_MAX_DIM 12
#endif

namespace cliff {

/// Largest supported generator count m; 2^m blades per algebra.
inline constexpr int kMaxDim = CLIFF_MAX_DIM;
static_assert(kMaxDim >= 1 && kMaxDim <= 31);

using Mask = std::uint32_t;

inline void check_dim(int m) {
  if (m < 1 || m > kMaxDim)
    throw PreconditionError("dimension m=" + std::to_string(m) + " outside [1, " +
                            std::to_string(kMaxDim) + "]");
}

inline int grade(Mask mask) { return std::popcount(mask); }

/// Basis blade e_A of R_{0,m}; bit j-1 of the mask stands for e_j.
struct BladeIndex {
  Mask mask = 0;
  int dim = 1;

  BladeIndex() = default;
  BladeIndex(Mask mask_, int dim_) : mask(mask_), dim(dim_) {
    check_dim(dim);
    if (dim < 32 && (mask >> dim) != 0)
      throw PreconditionError("blade mask has indices above m=" + std::to_string(dim));
  }

  /// e_{j1...jk} from 1-based, not necessarily sorted, distinct indices.
  static BladeIndex from_indices(const std::vector<int>& indices, int dim) {
    Mask mask = 0;
    for (int j : indices) {
      if (j < 1 || j > dim)
        throw PreconditionError("blade index " + std::to_string(j) + " out of range for m=" +
                                std::to_string(dim));
      mask |= Mask{1} << (j - 1);
    }
    return BladeIndex(mask, dim);
  }

  int grade() const { return cliff::grade(mask); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int j = 0; j < dim; ++j)
      if (mask & (Mask{1} << j)) out.push_back(j + 1);
    return out;
  }

  friend bool operator==(const BladeIndex&, const BladeIndex&) = default;
};

/// Sign of e_A e_B = sign * e_{A xor B}: transpositions needed to sort the
/// concatenated index list, plus one factor -1 per shared index (e_j^2 = -1).
inline int blade_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

inline std::pair<int, BladeIndex> blade_mul(const BladeIndex& a, const BladeIndex& b) {
  if (a.dim != b.dim)
    throw DimensionMismatch("blade_mul: dims " + std::to_string(a.dim) + " and " +
                            std::to_string(b.dim));
  return {blade_sign(a.mask, b.mask), BladeIndex(a.mask ^ b.mask, a.dim)};
}

/// (-1)^{|A|(|A|+1)/2}
inline int conjugation_sign(Mask mask) {
  const int k = grade(mask);
  return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

/// Canonical blade order: by grade, then by mask value.
struct BladeOrder {
  bool operator()(Mask a, Mask b) const {
    const int ga = grade(a), gb = grade(b);
    return ga != gb ? ga < gb : a < b;
  }
};

/// All 2^m masks in canonical order.
inline std::vector<Mask> blade_basis(int m) {
  check_dim(m);
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << m);
  for (int g = 0; g <= m; ++g)
    for (Mask a = 0; a < (Mask{1} << m); ++a)
      if (grade(a) == g) out.push_back(a);
  return out;
}

/// `e12`; `e{1,12}` once an index needs two digits; empty for the identity.
inline std::string blade_name(Mask mask) {
  if (mask == 0) return {};
  std::vector<int> idx;
  for (int j = 0; j < 32; ++j)
    if (mask & (Mask{1} << j)) idx.push_back(j + 1);
  std::string out = "e";
  if (idx.back() < 10) {
    for (int j : idx) out += static_cast<char>('0' + j);
    return out;
  }
  out += '{';
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(idx[i]);
  }
  out += '}';
  return out;
}

}  // namespace cliff
