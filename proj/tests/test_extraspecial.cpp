#include <random>
#include <set>

#include <gtest/gtest.h>

#include "localdeg/error.hpp"
#include "localdeg/extraspecial.hpp"
#include "localdeg/group.hpp"

using namespace localdeg;

namespace {

// Independent oracle: 3x3 upper unitriangular matrices mod p, multiplied as
// plain integer matrices.
struct Mat3 {
  long v[3][3];
};

Mat3 unitri(long x, long y, long z) { return {{{1, x, z}, {0, 1, y}, {0, 0, 1}}}; }

Mat3 matmul(const Mat3& a, const Mat3& b, long p) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long s = 0;
      for (int k = 0; k < 3; ++k) s += a.v[i][k] * b.v[k][j];
      c.v[i][j] = s % p;
    }
  return c;
}

}  // namespace

TEST(Heisenberg, TableMatchesMatrixOracle) {
  for (std::uint32_t p : {3u, 5u}) {
    const HeisenbergPair h = heisenberg(p);
    ASSERT_EQ(h.table.order(), std::size_t{p} * p * p);
    auto idx = [p](const Mat3& m) { return static_cast<Elem>(m.v[0][1] + p * m.v[1][2] + p * p * m.v[0][2]); };
    for (long a = 0; a < static_cast<long>(h.table.order()); ++a) {
      const Mat3 ma = unitri(a % p, (a / p) % p, a / (p * p));
      for (long b = 0; b < static_cast<long>(h.table.order()); b += 7) {
        const Mat3 mb = unitri(b % p, (b / p) % p, b / (p * p));
        EXPECT_EQ(h.table.mul(static_cast<Elem>(a), static_cast<Elem>(b)), idx(matmul(ma, mb, p)));
      }
    }
    EXPECT_TRUE(is_isomorphism(h.table, h.model, h.isomorphism));
  }
}

TEST(Heisenberg, RejectsTwoAndComposites) {
  EXPECT_THROW(heisenberg(2), Error);
  EXPECT_THROW(heisenberg(9), Error);
  try {
    heisenberg(2);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
}

TEST(Symplectic, OrderAndCommutatorFormula) {
  const SymplecticExtraspecial g(3, 2);
  EXPECT_EQ(g.order(), 243u);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Elem x = rng() % g.order(), y = rng() % g.order();
    const Elem direct = g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y)));
    EXPECT_EQ(g.commutator(x, y), direct);
    const auto u = g.decode(x), v = g.decode(y);
    const std::uint32_t expected = (g.beta(u.u, v.u) + 3 - g.beta(v.u, u.u)) % 3;
    EXPECT_EQ(g.commutator(x, y), g.central(expected));
  }
}

TEST(Symplectic, PowerMatchesRepeatedProduct) {
  const SymplecticExtraspecial g(5, 1);
  for (Elem x = 0; x < g.order(); x += 3) {
    Elem acc = g.identity();
    for (std::uint64_t k = 0; k < 7; ++k) {
      EXPECT_EQ(g.power(x, k), acc);
      acc = g.mul(acc, x);
    }
    EXPECT_EQ(g.power(x, 5), g.identity());
  }
}

TEST(Symplectic, EncodeDecodeRoundTrip) {
  const SymplecticExtraspecial g(3, 3);
  for (Elem x = 0; x < g.order(); x += 37) EXPECT_EQ(g.encode(g.decode(x)), x);
  EXPECT_EQ(g.generators().size(), 6u);
}

TEST(Symplectic, RejectsEvenPrime) { EXPECT_THROW(SymplecticExtraspecial(2, 1), Error); }

TEST(ExtraspecialQuotient, M1IsHeisenberg) {
  const QuotientConstruction qc = extraspecial_by_quotient(3, 1);
  EXPECT_EQ(qc.group.order(), 27u);
  EXPECT_EQ(qc.kernel.order(), 1u);
  EXPECT_TRUE(qc.isomorphism_verified);
}

TEST(ExtraspecialQuotient, M2StructureAndIsomorphism) {
  const QuotientConstruction qc = extraspecial_by_quotient(3, 2);
  EXPECT_EQ(qc.kernel.order(), 3u);
  EXPECT_TRUE(qc.isomorphism_verified);
  EXPECT_TRUE(is_isomorphism(qc.group, qc.model, qc.isomorphism));
  const ExtraspecialReport r = verify_extraspecial(qc.group, 3);
  EXPECT_EQ(r.order, 243u);
  EXPECT_EQ(r.exponent, 3u);
  EXPECT_EQ(r.center_order, 3u);
  EXPECT_EQ(r.derived_order, 3u);
  EXPECT_EQ(r.frattini_order, 3u);
  EXPECT_TRUE(r.quotient_elementary_abelian);
  EXPECT_TRUE(r.center_equals_derived);
  EXPECT_TRUE(r.verdict);
  // G/Z elementary abelian of order p^(2m).
  const TableGroup gz = quotient(qc.group, center(qc.group));
  EXPECT_EQ(gz.order(), 81u);
  EXPECT_TRUE(is_abelian(gz));
  EXPECT_EQ(exponent(gz), 3u);
}

TEST(ExtraspecialQuotient, CapExceeded) {
  try {
    extraspecial_by_quotient(3, 3, 10000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CapExceeded);
  }
}

TEST(ExtraspecialVerify, ModelAgreesWithTable) {
  for (std::uint32_t m : {1u, 2u, 3u, 4u}) {
    const ExtraspecialReport r = verify_extraspecial(SymplecticExtraspecial(3, m));
    std::size_t order = 1;
    for (std::uint32_t i = 0; i < 2 * m + 1; ++i) order *= 3;
    EXPECT_EQ(r.order, order);
    EXPECT_EQ(r.exponent, 3u);
    EXPECT_EQ(r.center_order, 3u);
    EXPECT_EQ(r.derived_order, 3u);
    EXPECT_TRUE(r.verdict);
  }
}

TEST(ExtraspecialVerify, ProductOfTwoIsNotExtraspecial) {
  const TableGroup hh = direct_product(heisenberg(3).table, heisenberg(3).table);
  EXPECT_FALSE(verify_extraspecial(hh, 3).verdict);
}

TEST(AbelianSubgroups, Order27) {
  const AbelianSearch s = max_abelian_subgroup_order(heisenberg(3).table, 3, 1);
  EXPECT_EQ(s.max_order, 9u);
  EXPECT_TRUE(s.bound_attained);
  EXPECT_TRUE(s.bound_holds);
  EXPECT_EQ(s.witness.order(), 9u);
}

TEST(AbelianSubgroups, Order243) {
  const TableGroup g = extraspecial_by_quotient(3, 2).group;
  const AbelianSearch s = max_abelian_subgroup_order(g, 3, 2);
  EXPECT_EQ(s.max_order, 27u);
  EXPECT_TRUE(s.bound_attained);
  EXPECT_TRUE(s.bound_holds);
  // The witness really is an abelian subgroup.
  EXPECT_TRUE(is_subgroup(g, s.witness.members));
  for (Elem a : s.witness.members)
    for (Elem b : s.witness.members) EXPECT_EQ(g.mul(a, b), g.mul(b, a));
}

TEST(AbelianSubgroups, RejectsAbelianInput) {
  const std::vector<TableGroup> fs{heisenberg(3).table};
  EXPECT_THROW(max_abelian_subgroup_order(quotient(fs[0], derived_subgroup(fs[0])), 3, 1), Error);
}

TEST(BoundedIndex, M2IntersectionIsCenter) {
  const TableGroup g = extraspecial_by_quotient(3, 2).group;
  const BoundedIndexIntersection b = bounded_index_intersection(g, 3, 2);
  EXPECT_EQ(b.intersection.order(), 3u);
  EXPECT_EQ(b.intersection, center(g));
  EXPECT_TRUE(b.contains_center);
  EXPECT_EQ(b.subgroups_used, 41u);
}

TEST(BoundedIndex, M1IsWholeGroup) {
  // Index < 3 leaves only G itself.
  const TableGroup g = heisenberg(3).table;
  const BoundedIndexIntersection b = bounded_index_intersection(g, 3, 1);
  EXPECT_EQ(b.intersection.order(), 27u);
  EXPECT_EQ(b.subgroups_used, 1u);
}

// Any two elements of E_m generate a group whose commutator subgroup is
// inside the center.
TEST(Invariants, CommutatorsAreCentral) {
  const SymplecticExtraspecial g(3, 3);
  std::mt19937_64 rng(3);
  std::set<Elem> seen;
  for (int i = 0; i < 2000; ++i) {
    const Elem c = g.commutator(rng() % g.order(), rng() % g.order());
    EXPECT_TRUE(g.decode(c).u == std::vector<std::uint32_t>(6, 0));
    seen.insert(c);
  }
  EXPECT_EQ(seen.size(), 3u);
}
