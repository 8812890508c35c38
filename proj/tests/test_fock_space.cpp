#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kerrkick/fock_space.hpp"
#include "test_support.hpp"

namespace kerrkick {
namespace {

std::vector<cplx> mat_vec(const OperatorMatrix& m, const std::vector<cplx>& v) {
  std::vector<cplx> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

std::vector<cplx> ket(std::size_t dim, std::size_t n) {
  std::vector<cplx> v(dim);
  v[n] = 1.0;
  return v;
}

TEST(AnnihilationOp, LowersFockState) {
  const auto a = annihilation_op(3);
  const auto out = mat_vec(a, ket(3, 2));
  EXPECT_NEAR(out[1].real(), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(out[0], cplx{});
  EXPECT_EQ(out[2], cplx{});
}

TEST(AnnihilationOp, KillsVacuum) {
  const auto out = mat_vec(annihilation_op(2), ket(2, 0));
  for (const auto& x : out) EXPECT_EQ(x, cplx{});
}

TEST(AnnihilationOp, NumberOperatorIdentity) {
  const auto a = annihilation_op(4);
  const auto n = adjoint(a) * a;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(n(i, j) - (i == j ? double(i) : 0.0)), 0.0, 1e-14);
}

TEST(AnnihilationOp, RejectsTinyDimension) {
  EXPECT_THROW(annihilation_op(1), InvalidDimension);
  EXPECT_THROW(annihilation_op(0), InvalidDimension);
}

TEST(AnnihilationOp, CreationActionAndTruncationEdge) {
  for (std::size_t dim = 2; dim <= 12; ++dim) {
    const auto ad = creation_op(dim);
    for (std::size_t n = 0; n < dim; ++n) {
      const auto out = mat_vec(ad, ket(dim, n));
      for (std::size_t m = 0; m < dim; ++m) {
        const double expected = (n + 1 < dim && m == n + 1) ? std::sqrt(double(n + 1)) : 0.0;
        EXPECT_NEAR(std::abs(out[m] - expected), 0.0, 1e-14) << "dim=" << dim << " n=" << n << " m=" << m;
      }
    }
  }
}

TEST(AnnihilationOp, CanonicalCommutatorOnInterior) {
  for (std::size_t dim = 2; dim <= 12; ++dim) {
    const auto a = annihilation_op(dim);
    const auto c = commutator(a, adjoint(a));
    for (std::size_t m = 0; m + 1 < dim; ++m)
      for (std::size_t n = 0; n + 1 < dim; ++n) EXPECT_NEAR(std::abs(c(m, n) - (m == n ? 1.0 : 0.0)), 0.0, 1e-13);
  }
}

TEST(TensorProduct, IdentityKronIdentity) {
  EXPECT_EQ(tensor_product(OperatorMatrix::identity(2), OperatorMatrix::identity(3)), OperatorMatrix::identity(6));
}

TEST(TensorProduct, ActsOnFirstFactor) {
  const ModeDims d{3, 4};
  const auto a = annihilation_op(3);
  const auto big = tensor_product(a, OperatorMatrix::identity(4));
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t n = 0; n < 4; ++n) {
      const auto out = mat_vec(big, ket(12, d.index(m, n)));
      for (std::size_t mm = 0; mm < 3; ++mm)
        for (std::size_t nn = 0; nn < 4; ++nn) {
          const cplx expected = (nn == n) ? a(mm, m) : cplx{};
          EXPECT_EQ(out[d.index(mm, nn)], expected);
        }
    }
}

TEST(TensorProduct, MixedProductProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_matrix(2, rng);
    const auto b = testing::random_matrix(2, rng);
    const auto c = testing::random_matrix(2, rng);
    const auto d = testing::random_matrix(2, rng);
    // Oracle: explicit 4x4 entries of (AC) (x) (BD) via index arithmetic.
    const auto lhs = tensor_product(a, b) * tensor_product(c, d);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t l = 0; l < 2; ++l) {
            cplx ac{}, bd{};
            for (std::size_t r = 0; r < 2; ++r) {
              ac += a(i, r) * c(r, j);
              bd += b(k, r) * d(r, l);
            }
            EXPECT_NEAR(std::abs(lhs(i * 2 + k, j * 2 + l) - ac * bd), 0.0, 1e-12);
          }
  }
}

TEST(Embedding, AnnihilateModeA) {
  const ModeDims d{2, 2};
  const auto a = embed_mode_a(annihilation_op(2), d);
  const auto out = mat_vec(a, ket(4, d.index(1, 0)));
  EXPECT_EQ(out, ket(4, d.index(0, 0)));
}

TEST(Embedding, CreateModeB) {
  const ModeDims d{2, 2};
  const auto bd = embed_mode_b(creation_op(2), d);
  EXPECT_EQ(mat_vec(bd, ket(4, d.index(0, 0))), ket(4, d.index(0, 1)));
}

TEST(Embedding, DistinctModesCommute) {
  const ModeDims d{3, 3};
  const auto a = embed_mode_a(annihilation_op(3), d);
  const auto b = embed_mode_b(annihilation_op(3), d);
  EXPECT_EQ(max_abs(commutator(a, b)), 0.0);
  EXPECT_EQ(max_abs(commutator(a, adjoint(b))), 0.0);
}

TEST(Embedding, DimensionMismatch) {
  EXPECT_THROW(embed_mode_a(annihilation_op(3), ModeDims{4, 3}), DimensionMismatch);
  EXPECT_THROW(embed_mode_b(annihilation_op(3), ModeDims{3, 4}), DimensionMismatch);
}

TEST(ModeDims, JointIndexRoundTrip) {
  for (std::size_t da = 2; da <= 9; ++da)
    for (std::size_t db = 2; db <= 9; ++db) {
      const ModeDims d{da, db};
      for (std::size_t m = 0; m < da; ++m)
        for (std::size_t n = 0; n < db; ++n) {
          const auto [mm, nn] = d.decode(d.index(m, n));
          EXPECT_EQ(mm, m);
          EXPECT_EQ(nn, n);
        }
    }
}

TEST(ModeDims, RequiresQubitSubspace) {
  EXPECT_THROW((ModeDims{1, 5}.validate()), InvalidDimension);
  EXPECT_THROW((ModeDims{5, 1}.validate()), InvalidDimension);
  EXPECT_NO_THROW((ModeDims{2, 2}.validate()));
}

TEST(OperatorMatrix, RejectsWrongEntryCount) {
  EXPECT_THROW(OperatorMatrix(3, std::vector<cplx>(8)), DimensionMismatch);
}

}  // namespace
}  // namespace kerrkick
