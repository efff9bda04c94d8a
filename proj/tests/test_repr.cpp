#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "localdeg/catalog.hpp"
#include "localdeg/error.hpp"
#include "localdeg/fq.hpp"
#include "localdeg/repr.hpp"

using namespace localdeg;

namespace {

using Dense = std::vector<std::vector<long>>;

Dense dense(const FqMatrix& m) {
  Dense d(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.at(i, j);
  return d;
}

Dense dense_mul(const Dense& a, const Dense& b, long q) {
  Dense c(a.size(), std::vector<long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j) {
      long s = 0;
      for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
      c[i][j] = s % q;
    }
  return c;
}

FqMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t q) {
  FqMatrix m(r, c, q);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng() % q;
  return m;
}

}  // namespace

TEST(PrimeField, Basics) {
  const PrimeField f(7);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.pow(3, 6), 1u);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.least_primitive_root_of_unity(3), 2u);
  EXPECT_THROW(PrimeField(8), Error);
  EXPECT_THROW(f.inv(0), Error);
  try {
    PrimeField(5).least_primitive_root_of_unity(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoRootOfUnity);
  }
}

TEST(FqMatrix, ProductMatchesSchoolbook) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const FqMatrix a = random_matrix(rng, 4, 5, 11), b = random_matrix(rng, 5, 3, 11);
    EXPECT_EQ(dense(a * b), dense_mul(dense(a), dense(b), 11));
  }
}

TEST(FqMatrix, InverseAndRank) {
  std::mt19937_64 rng(4);
  int invertible = 0;
  for (int t = 0; t < 30; ++t) {
    const FqMatrix a = random_matrix(rng, 4, 4, 5);
    if (a.rank() < 4) {
      EXPECT_THROW(a.inverse(), Error);
      continue;
    }
    ++invertible;
    EXPECT_TRUE((a * a.inverse()).is_identity());
  }
  EXPECT_GT(invertible, 0);
}

TEST(FqMatrix, RankNullity) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const FqMatrix a = random_matrix(rng, 3, 6, 3);
    const FqMatrix n = a.nullspace();
    EXPECT_EQ(a.rank() + n.rows(), 6u);
    for (std::size_t i = 0; i < n.rows(); ++i) {
      for (Fq x : a.apply(n.row(i))) EXPECT_EQ(x, 0u);
    }
  }
}

TEST(FqMatrix, KronDimensionsAndMixedProduct) {
  std::mt19937_64 rng(8);
  const FqMatrix a = random_matrix(rng, 2, 2, 7), b = random_matrix(rng, 3, 3, 7);
  const FqMatrix c = random_matrix(rng, 2, 2, 7), d = random_matrix(rng, 3, 3, 7);
  EXPECT_EQ(a.kron(b).rows(), 6u);
  EXPECT_EQ(a.kron(b) * c.kron(d), (a * c).kron(b * d));
}

TEST(FqMatrix, SerializationRoundTrip) {
  std::mt19937_64 rng(10);
  const FqMatrix a = random_matrix(rng, 4, 4, 13);
  std::stringstream ss;
  write_matrix(ss, a);
  EXPECT_EQ(read_matrix(ss), a);
}

TEST(FqSubspace, InsertAndContains) {
  FqSubspace s(3, 5);
  const std::vector<Fq> v1{1, 2, 3}, v2{2, 4, 6}, v3{0, 1, 0};
  EXPECT_TRUE(s.insert(v1));
  EXPECT_FALSE(s.insert(v2));
  EXPECT_TRUE(s.contains(v2));
  EXPECT_FALSE(s.contains(v3));
  EXPECT_TRUE(s.insert(v3));
  EXPECT_EQ(s.dim(), 2u);
}

TEST(BaseModule, SevenThreeMatrices) {
  const BaseModule w = base_module_W(3, 7);
  EXPECT_EQ(w.zeta, 2u);
  EXPECT_EQ(dense(w.y_image), (Dense{{2, 0, 0}, {0, 4, 0}, {0, 0, 1}}));
  EXPECT_TRUE(w.x_image.is_permutation());
  // [X, Y] = X Y X^-1 Y^-1 by hand: X^-1 = X^T for a permutation matrix,
  // Y^-1 = diag(4, 2, 1) mod 7.
  const Dense xinv = dense(w.x_image.transpose());
  const Dense yinv{{4, 0, 0}, {0, 2, 0}, {0, 0, 1}};
  const Dense comm = dense_mul(dense_mul(dense_mul(dense(w.x_image), dense(w.y_image), 7), xinv, 7), yinv, 7);
  EXPECT_EQ(comm, (Dense{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  EXPECT_EQ(w.commutator_scalar, 2u);
  EXPECT_TRUE(w.homomorphism_verified);
}

TEST(BaseModule, NoRootOfUnity) {
  try {
    base_module_W(3, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoRootOfUnity);
  }
}

TEST(BaseModule, CommutantIsScalars) {
  for (auto [p, q] : {std::pair{3u, 7u}, std::pair{3u, 13u}, std::pair{5u, 11u}}) {
    const BaseModule w = base_module_W(p, q);
    EXPECT_EQ(commutant_dimension(w.rep), 1u) << p << " " << q;
    EXPECT_TRUE(is_faithful(w.rep));
  }
}

TEST(TensorModule, M2Structure) {
  const TensorModule t = tensor_power_rep(3, 7, 2);
  EXPECT_EQ(t.rep.dim, 9u);
  EXPECT_TRUE(t.relations_verified);
  EXPECT_TRUE(t.homomorphism_exhaustive);
  EXPECT_TRUE(t.homomorphism_verified);
  EXPECT_EQ(commutant_dimension(t.rep), 1u);
  EXPECT_TRUE(is_faithful(t.rep));
  // Center acts by scalars zeta^k.
  for (std::uint32_t a = 0; a < 3; ++a) {
    const auto s = t.rep.images[t.group.central(a)].scalar_value();
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, PrimeField(7).pow(t.central_scalar, a));
  }
}

TEST(TensorModule, SpinClosureFromEveryBasisVector) {
  for (std::uint32_t m : {1u, 2u}) {
    const TensorModule t = tensor_power_rep(3, 7, m);
    for (std::size_t i = 0; i < t.rep.dim; ++i) {
      std::vector<Fq> e(t.rep.dim, 0);
      e[i] = 1;
      EXPECT_EQ(spin_closure_dimension(t.rep, e), t.rep.dim);
    }
  }
}

TEST(TensorModule, ProductViewKillsCentralKernel) {
  const ProductTensorModule pm = tensor_rep_on_product(3, 7, 2);
  EXPECT_EQ(pm.central_kernel.order(), 3u);
  ASSERT_EQ(pm.central_scalars.size(), 2u);
  for (Elem z : pm.central_kernel.members) EXPECT_TRUE(pm.rep.images[z].is_identity());
  EXPECT_EQ(kernel(pm.rep).size(), 3u);
}

TEST(RegularModule, HomMultiplicityEqualsDimension) {
  for (std::uint32_t m : {1u, 2u}) {
    const TensorModule t = tensor_power_rep(3, 7, m);
    const MatrixRep reg = regular_module(t.group, 7);
    EXPECT_EQ(reg.dim, t.group.order());
    EXPECT_EQ(hom_space_dimension(t.rep, reg), t.rep.dim);
    const FqSubspace emb = equivariant_embedding(t.rep, reg);
    EXPECT_EQ(emb.dim(), t.rep.dim);
    EXPECT_TRUE(is_invariant(reg, emb));
  }
}

TEST(RegularModule, TrivialModuleOccursOnce) {
  // Hom(1, F_q[G]) is spanned by the sum of all group elements.
  const TableGroup s3 = symmetric(3);
  const MatrixRep reg = regular_module(s3, 5, "S3");
  EXPECT_EQ(hom_space_dimension(trivial_rep(reg, 1), reg), 1u);
  EXPECT_EQ(commutant_dimension(reg), 6u);
}

TEST(RegularModule, GroupMismatch) {
  const MatrixRep a = regular_module(symmetric(3), 5, "S3");
  const MatrixRep b = regular_module(dihedral(3), 5, "D3");
  try {
    hom_space_dimension(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GroupMismatch);
  }
}

// Intertwiners really intertwine.
TEST(Invariants, IntertwinersSatisfyEquation) {
  const BaseModule w = base_module_W(3, 7);
  const MatrixRep reg = regular_module(SymplecticExtraspecial(3, 1), 7);
  const auto basis = intertwiners(w.rep.generator_images, reg.generator_images);
  ASSERT_EQ(basis.size(), 3u);
  for (const auto& u : basis) {
    for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(u * w.rep.generator_images[k], reg.generator_images[k] * u);
  }
}
