#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cliff/blade.hpp"
#include "cliff/linalg.hpp"
#include "cliff/polynomial.hpp"

namespace cliff {

/// Real basis of P(k): (monomial, blade) pairs, monomials in graded-lex order
/// and blades in (grade, mask) order, monomial-major. An optional grade
/// filter restricts to k-vector valued polynomials of that grade.
class PolyBasis {
 public:
  PolyBasis(int m, int k, std::optional<int> blade_grade = std::nullopt)
      : m_(m), k_(k), blade_grade_(blade_grade) {
    check_dim(m);
    if (k >= 0) monomials_ = monomial_basis(m, k);
    for (Mask b : blade_basis(m))
      if (!blade_grade || grade(b) == *blade_grade) blades_.push_back(b);
    for (std::size_t i = 0; i < monomials_.size(); ++i) mono_index_.emplace(monomials_[i], i);
    blade_pos_.assign(std::size_t{1} << m, kAbsent);
    for (std::size_t i = 0; i < blades_.size(); ++i) blade_pos_[blades_[i]] = i;
  }

  int dim() const { return m_; }
  int degree() const { return k_; }
  std::optional<int> blade_grade() const { return blade_grade_; }
  std::size_t size() const { return monomials_.size() * blades_.size(); }

  const Monomial& monomial(std::size_t i) const { return monomials_[i / blades_.size()]; }
  Mask blade(std::size_t i) const { return blades_[i % blades_.size()]; }

  CliffordPolynomial element(std::size_t i) const {
    return CliffordPolynomial::term(monomial(i), Multivector::blade(BladeIndex(blade(i), m_)));
  }

  /// Index of (monomial, blade), or nullopt if the pair is outside the basis.
  std::optional<std::size_t> index_of(const Monomial& mono, Mask b) const {
    auto it = mono_index_.find(mono);
    if (it == mono_index_.end() || blade_pos_[b] == kAbsent) return std::nullopt;
    return it->second * blades_.size() + blade_pos_[b];
  }

  /// Parity class (exponents mod 2) xor blade mask. Preserved by d_j e_j,
  /// x_j e_j and d_j d_j, hence by every operator built from them.
  Mask parity_class(std::size_t i) const {
    const Monomial& mono = monomial(i);
    Mask s = blade(i);
    for (int j = 0; j < m_; ++j)
      if (mono.exponents[static_cast<std::size_t>(j)] & 1) s ^= Mask{1} << j;
    return s;
  }

  Vector coordinates(const CliffordPolynomial& p) const {
    if (p.dim() != m_) throw DimensionMismatch("coordinates: dimension mismatch");
    Vector v(size());
    for (const auto& [mono, a] : p.terms())
      for (const auto& [mask, c] : a.terms()) {
        auto idx = index_of(mono, mask);
        if (!idx) throw PreconditionError("coordinates: polynomial has a term outside the basis");
        v[*idx] = c;
      }
    return v;
  }

  CliffordPolynomial from_coordinates(const Vector& v) const {
    if (v.size() != size()) throw DimensionMismatch("from_coordinates: size mismatch");
    CliffordPolynomial out(m_);
    for (std::size_t mi = 0; mi < monomials_.size(); ++mi) {
      Multivector a(m_);
      for (std::size_t bi = 0; bi < blades_.size(); ++bi) a.add_term(blades_[bi], v[mi * blades_.size() + bi]);
      out.add_term(monomials_[mi], a);
    }
    return out;
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  int m_, k_;
  std::optional<int> blade_grade_;
  std::vector<Monomial> monomials_;
  std::vector<Mask> blades_;
  std::map<Monomial, std::size_t, GradedLex> mono_index_;
  std::vector<std::size_t> blade_pos_;
};

/// Linear map from one polynomial space into a stack of others, given by its
/// action on basis elements.
using StackedOperator = std::function<std::vector<CliffordPolynomial>(const CliffordPolynomial&)>;

/// Full matrix of a stacked operator; codomain blocks stacked vertically.
inline Matrix operator_matrix(const PolyBasis& domain, const std::vector<PolyBasis>& codomain,
                              const StackedOperator& op) {
  std::vector<std::size_t> offset;
  std::size_t rows = 0;
  for (const auto& b : codomain) {
    offset.push_back(rows);
    rows += b.size();
  }
  Matrix out(rows, domain.size());
  for (std::size_t col = 0; col < domain.size(); ++col) {
    const auto images = op(domain.element(col));
    for (std::size_t s = 0; s < codomain.size(); ++s)
      for (const auto& [mono, a] : images[s].terms())
        for (const auto& [mask, c] : a.terms()) {
          auto idx = codomain[s].index_of(mono, mask);
          if (!idx) throw InternalError("operator_matrix: image leaves the codomain basis");
          out(offset[s] + *idx, col) = c;
        }
  }
  return out;
}

/// The same operator split into its parity-class diagonal blocks.
struct OperatorBlock {
  Mask parity = 0;
  std::vector<std::size_t> cols;  // domain basis indices
  std::vector<std::size_t> rows;  // stacked codomain indices
  Matrix matrix;
};

class BlockedOperator {
 public:
  BlockedOperator(const PolyBasis& domain, const std::vector<PolyBasis>& codomain, const StackedOperator& op)
      : domain_size_(domain.size()) {
    std::vector<std::size_t> offset;
    std::size_t rows = 0;
    for (const auto& b : codomain) {
      offset.push_back(rows);
      rows += b.size();
    }
    codomain_size_ = rows;

    std::map<Mask, std::size_t> block_of;
    auto block_for = [&](Mask parity) -> OperatorBlock& {
      auto [it, inserted] = block_of.try_emplace(parity, blocks_.size());
      if (inserted) blocks_.push_back(OperatorBlock{parity, {}, {}, {}});
      return blocks_[it->second];
    };
    for (std::size_t i = 0; i < domain.size(); ++i) block_for(domain.parity_class(i)).cols.push_back(i);
    for (std::size_t s = 0; s < codomain.size(); ++s)
      for (std::size_t i = 0; i < codomain[s].size(); ++i)
        block_for(codomain[s].parity_class(i)).rows.push_back(offset[s] + i);

    std::vector<std::size_t> row_slot(rows);
    for (auto& blk : blocks_) {
      blk.matrix = Matrix(blk.rows.size(), blk.cols.size());
      for (std::size_t r = 0; r < blk.rows.size(); ++r) row_slot[blk.rows[r]] = r;
    }
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
      auto& blk = blocks_[bi];
      for (std::size_t c = 0; c < blk.cols.size(); ++c) {
        const auto images = op(domain.element(blk.cols[c]));
        for (std::size_t s = 0; s < codomain.size(); ++s)
          for (const auto& [mono, a] : images[s].terms())
            for (const auto& [mask, v] : a.terms()) {
              auto idx = codomain[s].index_of(mono, mask);
              if (!idx) throw InternalError("BlockedOperator: image leaves the codomain basis");
              const std::size_t row = offset[s] + *idx;
              if (block_of.at(codomain[s].parity_class(*idx)) != bi)
                throw InternalError("BlockedOperator: operator mixes parity classes");
              blk.matrix(row_slot[row], c) = v;
            }
      }
    }
  }

  const std::vector<OperatorBlock>& blocks() const { return blocks_; }
  std::size_t domain_size() const { return domain_size_; }
  std::size_t codomain_size() const { return codomain_size_; }

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& blk : blocks_) r += bareiss_rank(blk.matrix);
    return r;
  }

  /// Kernel basis as full-length domain coordinate vectors.
  std::vector<Vector> kernel() const {
    std::vector<Vector> out;
    for (const auto& blk : blocks_)
      for (const auto& v : null_space(blk.matrix)) {
        Vector full(domain_size_);
        for (std::size_t c = 0; c < blk.cols.size(); ++c) full[blk.cols[c]] = v[c];
        out.push_back(std::move(full));
      }
    return out;
  }

  /// Solves op(x) = y for square invertible blocks.
  Vector solve(const Vector& y) const {
    if (y.size() != codomain_size_) throw DimensionMismatch("BlockedOperator::solve: size mismatch");
    Vector x(domain_size_);
    for (const auto& blk : blocks_) {
      if (blk.rows.size() != blk.cols.size()) throw SingularMatrix("BlockedOperator::solve: non-square block");
      if (blk.cols.empty()) continue;
      Vector rhs(blk.rows.size());
      bool all_zero = true;
      for (std::size_t r = 0; r < blk.rows.size(); ++r) {
        rhs[r] = y[blk.rows[r]];
        all_zero = all_zero && sgn(rhs[r]) == 0;
      }
      if (all_zero) continue;
      const Vector sol = bareiss_solve(blk.matrix, rhs);
      for (std::size_t c = 0; c < blk.cols.size(); ++c) x[blk.cols[c]] = sol[c];
    }
    return x;
  }

 private:
  std::size_t domain_size_ = 0, codomain_size_ = 0;
  std::vector<OperatorBlock> blocks_;
};

}  // namespace cliff
