#include <gtest/gtest.h>

#include "cliff/basis.hpp"
#include "cliff/dirac.hpp"
#include "cliff/fischer.hpp"
#include "cliff/sampling.hpp"

using namespace cliff;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  Matrix a(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (int v : r) a(i, j++) = v;
    ++i;
  }
  return a;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int rank_cap) {
  // product of rows x r and r x cols factors, so rank <= r
  const std::size_t r = static_cast<std::size_t>(rank_cap);
  Matrix a(rows, r), b(r, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = random_rational(rng, 3, 3);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = random_rational(rng, 3, 3);
  return a * b;
}

}  // namespace

TEST(Linalg, SmallExamples) {
  EXPECT_EQ(bareiss_rank(from_rows({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(bareiss_rank(from_rows({{0, 1}, {1, 0}})), 2u);
  EXPECT_EQ(bareiss_rank(Matrix(3, 2)), 0u);

  const Vector x = bareiss_solve(from_rows({{2, 1}, {1, 3}}), Vector{3, 5});
  EXPECT_EQ(x[0], Rational(4, 5));
  EXPECT_EQ(x[1], Rational(7, 5));
  EXPECT_THROW(bareiss_solve(from_rows({{1, 2}, {2, 4}}), Vector{1, 1}), SingularMatrix);

  const auto ns = null_space(from_rows({{1, 2, 3}}));
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], 0);
}

TEST(LinalgProperties, BareissMatchesRationalEliminationOracle) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 7, cols = 1 + (trial / 7) % 7;
    const Matrix a = random_matrix(rng, rows, cols, 1 + trial % 5);
    const std::size_t r = bareiss_rank(a);
    ASSERT_EQ(r, rational_rank(a));
    for (const auto& v : null_space(a)) {
      const Vector z = a * v;
      for (const auto& c : z) ASSERT_EQ(c, 0);
    }
    if (rows == cols && r == rows) {
      Vector b(rows);
      for (auto& c : b) c = random_rational(rng);
      ASSERT_EQ(a * bareiss_solve(a, b), b);
    }
  }
}

TEST(Basis, CoordinatesRoundTrip) {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + trial % 4, k = trial % 5;
    const PolyBasis b(m, k);
    ASSERT_EQ(b.size(), space_dim(m, k));
    const CliffordPolynomial p = random_polynomial(m, k, rng, 4);
    ASSERT_EQ(b.from_coordinates(b.coordinates(p)), p);
  }
  EXPECT_EQ(PolyBasis(2, -1).size(), 0u);
  EXPECT_THROW(PolyBasis(2, 2).coordinates(CliffordPolynomial::variable(2, 1)), PreconditionError);
}

TEST(Basis, BlockedRankMatchesFullMatrix) {
  for (int m = 1; m <= 3; ++m)
    for (int k = 2; k <= 4; ++k) {
      if (m == 3 && k == 4) continue;
      const PolyBasis dom(m, k), cod(m, k - 2);
      const StackedOperator s = [](const CliffordPolynomial& p) { return stack_one(sandwich(p)); };
      const Matrix full = operator_matrix(dom, {cod}, s);
      const BlockedOperator blocked(dom, {cod}, s);
      ASSERT_EQ(blocked.rank(), rational_rank(full)) << m << " " << k;
      ASSERT_EQ(blocked.kernel().size(), dom.size() - blocked.rank());
      for (const auto& v : blocked.kernel()) ASSERT_TRUE(is_inframonogenic(dom.from_coordinates(v)));
    }
}

TEST(Basis, SandwichOfEmbeddingSizes) {
  // S∘T acts on P(k-2): 4 x 4 at (2,2), 12 x 12 at (2,4).
  EXPECT_EQ(fischer_operators(2, 2)->st.domain_size(), 4u);
  EXPECT_EQ(fischer_operators(2, 2)->st.codomain_size(), 4u);
  EXPECT_EQ(fischer_operators(2, 4)->st.domain_size(), 12u);
  EXPECT_EQ(fischer_operators(2, 4)->st.rank(), 12u);
  const Matrix st = sandwich_matrix(2, 4) * embed_matrix(2, 4);
  EXPECT_EQ(st.rows(), 12u);
  EXPECT_EQ(rational_rank(st), 12u);
}

TEST(Basis, OperatorMixingParityIsRejected) {
  const PolyBasis dom(2, 1), cod(2, 1);
  const StackedOperator swap_blade = [](const CliffordPolynomial& p) {
    return stack_one(poly_mul_mv_left(p, Multivector::basis_vector(p.dim(), 1)));
  };
  // left multiplication by e1 changes the blade but not the monomial: parity moves
  EXPECT_THROW(BlockedOperator(dom, {cod}, swap_blade), InternalError);
}
