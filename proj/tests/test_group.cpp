#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "localdeg/catalog.hpp"
#include "localdeg/error.hpp"
#include "localdeg/extraspecial.hpp"
#include "localdeg/group.hpp"

using namespace localdeg;

namespace {

// Brute-force oracles working on a raw table only.
struct RawGroup {
  std::size_t n;
  std::vector<Elem> t;
  Elem mul(Elem a, Elem b) const { return t[a * n + b]; }
};

RawGroup perm_oracle_s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  RawGroup g{perms.size(), {}};
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = a[b[i]];
      g.t.push_back(static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
    }
  }
  return g;
}

std::size_t oracle_center_order(const RawGroup& g) {
  std::size_t c = 0;
  for (Elem a = 0; a < g.n; ++a) {
    bool central = true;
    for (Elem b = 0; b < g.n; ++b) central = central && g.mul(a, b) == g.mul(b, a);
    c += central;
  }
  return c;
}

std::size_t oracle_exponent(const RawGroup& g, Elem e) {
  std::size_t ex = 1;
  for (Elem a = 0; a < g.n; ++a) {
    std::size_t k = 1;
    for (Elem x = a; x != e; x = g.mul(x, a)) ++k;
    ex = std::lcm(ex, k);
  }
  return ex;
}

TableGroup table_of(const RawGroup& g) { return TableGroup::from_table(g.n, g.t); }

std::vector<std::size_t> sorted_orders(const std::vector<Subgroup>& subs) {
  std::vector<std::size_t> o;
  for (const auto& s : subs) o.push_back(s.order());
  std::sort(o.begin(), o.end());
  return o;
}

}  // namespace

TEST(TableValidation, TrivialGroup) {
  const TableGroup g = TableGroup::from_table(1, {0});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.identity(), 0u);
}

TEST(TableValidation, PermutationOracleS3) {
  const RawGroup raw = perm_oracle_s3();
  const TableGroup g = table_of(raw);
  EXPECT_EQ(g.order(), 6u);
  const StructureReport r = structure_report(g);
  EXPECT_EQ(r.exponent, oracle_exponent(raw, g.identity()));
  EXPECT_EQ(r.center_order, oracle_center_order(raw));
  EXPECT_EQ(r.exponent, 6u);
  EXPECT_EQ(r.center_order, 1u);
  EXPECT_EQ(r.derived_order, 3u);
  EXPECT_EQ(r.derived_length, 2u);
}

TEST(TableValidation, RepeatedRowsRejected) {
  try {
    TableGroup::from_table(2, {0, 1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotLatinSquare);
  }
}

TEST(TableValidation, LoopIsNotAssociative) {
  // A Latin square with identity 0 and x*x = 0: a loop of order 5.
  const std::vector<Elem> t{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  try {
    TableGroup::from_table(5, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonAssociative);
  }
}

TEST(TableValidation, MissingIdentity) {
  // a - b mod 3 has a right identity only.
  std::vector<Elem> t;
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) t.push_back((a + 3 - b) % 3);
  try {
    TableGroup::from_table(3, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoIdentity);
  }
}

TEST(TableValidation, OutOfRangeEntry) {
  EXPECT_THROW(TableGroup::from_table(2, {0, 1, 1, 2}), Error);
  EXPECT_THROW(TableGroup::from_table(2, {0, 1, 1}), Error);
}

TEST(TableValidation, CapEnforced) {
  std::vector<Elem> t(16);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) t[a * 4 + b] = (a + b) % 4;
  try {
    TableGroup::from_table(4, t, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CapExceeded);
  }
}

TEST(Structure, HeisenbergThree) {
  const StructureReport r = structure_report(heisenberg(3).table);
  EXPECT_EQ(r.order, 27u);
  EXPECT_EQ(r.exponent, 3u);
  EXPECT_EQ(r.center_order, 3u);
  EXPECT_EQ(r.derived_order, 3u);
  EXPECT_EQ(r.derived_length, 2u);
  EXPECT_FALSE(r.is_abelian);
}

TEST(Structure, CyclicFive) {
  const StructureReport r = structure_report(cyclic(5));
  EXPECT_EQ(r.order, 5u);
  EXPECT_EQ(r.exponent, 5u);
  EXPECT_EQ(r.center_order, 5u);
  EXPECT_EQ(r.derived_order, 1u);
  EXPECT_EQ(r.derived_length, 1u);
  EXPECT_TRUE(r.is_abelian);
}

TEST(Structure, TrivialGroupHasLengthZero) { EXPECT_EQ(structure_report(cyclic(1)).derived_length, 0u); }

TEST(Structure, A5IsNotSolvable) {
  const StructureReport r = structure_report(alternating(5));
  EXPECT_EQ(r.order, 60u);
  EXPECT_EQ(r.derived_order, 60u);
  EXPECT_EQ(r.derived_length, 0u);
}

TEST(Products, C2TimesC3) {
  const TableGroup g = direct_product(cyclic(2), cyclic(3));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(exponent(g), 6u);
}

TEST(Products, MixedRadixIndexing) {
  const std::vector<TableGroup> fs{cyclic(2), cyclic(3), cyclic(4)};
  const TableGroup g = direct_product(fs);
  for (Elem e = 0; e < g.order(); ++e) {
    const auto c = product_components(fs, e);
    EXPECT_EQ(e, c[0] * 12 + c[1] * 4 + c[2]);
    EXPECT_EQ(product_element(fs, c), e);
  }
}

TEST(Quotients, C4ByOrderTwo) {
  const TableGroup c4 = cyclic(4);
  const Elem two[] = {2};
  const Subgroup n = generate(c4, two);
  ASSERT_EQ(n.order(), 2u);
  const TableGroup q = quotient(c4, n);
  EXPECT_EQ(q.order(), 2u);
  EXPECT_EQ(exponent(q), 2u);
}

TEST(Quotients, NonNormalRejected) {
  const TableGroup s3 = symmetric(3);
  for (Elem x = 0; x < 6; ++x) {
    const Elem gens[] = {x};
    const Subgroup h = generate(s3, gens);
    if (h.order() != 2) continue;
    try {
      quotient(s3, h);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotNormal);
    }
    return;
  }
  FAIL() << "no subgroup of order 2";
}

TEST(Quotients, ProjectionIsAHomomorphism) {
  const TableGroup d4 = dihedral(4);
  const Quotient q = quotient_with_map(d4, center(d4));
  EXPECT_EQ(q.group.order(), 4u);
  for (Elem a = 0; a < d4.order(); ++a)
    for (Elem b = 0; b < d4.order(); ++b)
      EXPECT_EQ(q.projection[d4.mul(a, b)], q.group.mul(q.projection[a], q.projection[b]));
  // Cosets are numbered by increasing minimal representative.
  EXPECT_TRUE(std::is_sorted(q.representatives.begin(), q.representatives.end()));
}

TEST(Quotients, ExtraspecialByQuotientOrder) {
  const QuotientConstruction qc = extraspecial_by_quotient(3, 2);
  EXPECT_EQ(qc.product.order(), 729u);
  EXPECT_EQ(qc.group.order(), 243u);
}

TEST(IndexP, ExtraspecialOrder243HasForty) {
  const TableGroup g = extraspecial_by_quotient(3, 2).group;
  const auto subs = index_p_subgroups(g, 3);
  EXPECT_EQ(subs.size(), 40u);
  // Cross-check against full subgroup enumeration: every subgroup of order 81.
  std::size_t count81 = 0;
  for (const auto& s : enumerate_subgroups(g)) count81 += s.order() == 81;
  EXPECT_EQ(count81, 40u);
  for (const auto& s : subs) {
    EXPECT_EQ(s.order(), 81u);
    EXPECT_TRUE(is_subgroup(g, s.members));
  }
}

TEST(IndexP, C2) {
  const auto subs = index_p_subgroups(cyclic(2), 2);
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_EQ(subs[0].order(), 1u);
}

TEST(IndexP, C6AtThree) {
  const auto subs = index_p_subgroups(cyclic(6), 3);
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_EQ(subs[0].order(), 2u);
}

TEST(MinimalNormal, C6) { EXPECT_EQ(sorted_orders(minimal_normal_subgroups(cyclic(6))), (std::vector<std::size_t>{2, 3})); }

TEST(MinimalNormal, A4HasKleinFour) {
  const TableGroup a4 = alternating(4);
  const auto subs = minimal_normal_subgroups(a4);
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_EQ(subs[0].order(), 4u);
  EXPECT_EQ(exponent(subgroup_as_group(a4, subs[0]).group), 2u);
}

TEST(MinimalNormal, PrimeCyclic) {
  const auto subs = minimal_normal_subgroups(cyclic(7));
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_EQ(subs[0].order(), 7u);
}

TEST(MinimalNormal, MatchesBruteForceOnCatalogue) {
  for (const auto& ng : small_groups_up_to_8()) {
    if (ng.group.order() == 1) continue;
    const auto subs = enumerate_subgroups(ng.group);
    std::set<std::vector<Elem>> expected;
    for (const auto& n : subs) {
      if (n.order() == 1 || !is_normal(ng.group, n)) continue;
      bool minimal = true;
      for (const auto& m : subs) {
        if (m.order() > 1 && m.order() < n.order() && is_normal(ng.group, m) &&
            std::includes(n.members.begin(), n.members.end(), m.members.begin(), m.members.end())) {
          minimal = false;
        }
      }
      if (minimal) expected.insert(n.members);
    }
    std::set<std::vector<Elem>> got;
    for (const auto& s : minimal_normal_subgroups(ng.group)) got.insert(s.members);
    EXPECT_EQ(got, expected) << ng.name;
  }
}

TEST(AbelianWitness, C2xC4) {
  const AbelianWitness w = abelian_witness(direct_product(cyclic(2), cyclic(4)));
  auto idx = w.indices;
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(idx, (std::vector<std::size_t>{2, 4}));
}

TEST(AbelianWitness, C5) {
  const AbelianWitness w = abelian_witness(cyclic(5));
  ASSERT_EQ(w.complements.size(), 1u);
  EXPECT_EQ(w.complements[0].order(), 1u);
  EXPECT_EQ(w.indices[0], 5u);
}

TEST(AbelianWitness, C2xC2xC3) {
  const std::vector<TableGroup> fs{cyclic(2), cyclic(2), cyclic(3)};
  const TableGroup g = direct_product(fs);
  const AbelianWitness w = abelian_witness(g);
  auto idx = w.indices;
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(idx, (std::vector<std::size_t>{2, 2, 3}));
  Subgroup inter = whole_group(g);
  for (const auto& h : w.complements) inter = intersect(inter, h);
  EXPECT_EQ(inter.order(), 1u);
  for (std::size_t i : w.indices) EXPECT_LE(i, exponent(g));
}

TEST(AbelianWitness, NonAbelianRejected) {
  try {
    abelian_witness(symmetric(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAbelian);
  }
}

TEST(AbelianWitness, PropertyOnAbelianProducts) {
  const std::vector<std::vector<std::size_t>> shapes{{2}, {4, 2}, {2, 2, 2}, {3, 3}, {9, 3}, {6, 10}, {8, 4, 2}, {5, 5, 3}};
  for (const auto& shape : shapes) {
    std::vector<TableGroup> fs;
    for (std::size_t n : shape) fs.push_back(cyclic(n));
    const TableGroup g = direct_product(fs);
    const AbelianWitness w = abelian_witness(g);
    Subgroup inter = whole_group(g);
    std::size_t prod = 1;
    for (std::size_t i = 0; i < w.complements.size(); ++i) {
      inter = intersect(inter, w.complements[i]);
      EXPECT_EQ(g.order() / w.complements[i].order(), w.indices[i]);
      EXPECT_LE(w.indices[i], exponent(g));
      prod *= w.indices[i];
    }
    EXPECT_EQ(inter.order(), 1u);
    EXPECT_EQ(prod, g.order());
  }
}

TEST(ProductQuotient, SingleFactorA4) {
  const std::vector<TableGroup> fs{alternating(4)};
  const TableGroup prod = direct_product(fs);
  const auto v = product_quotient_check(fs, prod, whole_group(prod), trivial_subgroup(prod));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.minimal_normal_order, 4u);
  EXPECT_EQ(v.witness_factor_order, 12u);
}

TEST(ProductQuotient, DiagonalC2) {
  const std::vector<TableGroup> fs{cyclic(2), cyclic(2)};
  const TableGroup prod = direct_product(fs);
  const Elem diag[] = {product_element(fs, std::vector<Elem>{1, 1})};
  const auto v = product_quotient_check(fs, prod, generate(prod, diag), trivial_subgroup(prod));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.minimal_normal_order, 2u);
  EXPECT_EQ(v.witness_factor_order, 2u);
}

TEST(ProductQuotient, ExhaustiveOnC2Cubed) {
  const std::vector<TableGroup> fs{cyclic(2), cyclic(2), cyclic(2)};
  const TableGroup prod = direct_product(fs);
  std::size_t configs = 0;
  const auto subs = enumerate_subgroups(prod);
  EXPECT_EQ(subs.size(), 16u);  // subspaces of F_2^3: 1 + 7 + 7 + 1
  for (const auto& h : subs) {
    for (const auto& n : subs) {
      if (!std::includes(h.members.begin(), h.members.end(), n.members.begin(), n.members.end())) continue;
      ++configs;
      EXPECT_TRUE(product_quotient_check(fs, prod, h, n).holds);
    }
  }
  // Pairs N <= H of subspaces of F_2^3.
  EXPECT_EQ(configs, 1u + 7 * 2 + 7 * 5 + 16);
}

TEST(ProductQuotient, NotNormalRejected) {
  const std::vector<TableGroup> fs{symmetric(3)};
  const TableGroup prod = direct_product(fs);
  for (const auto& s : enumerate_subgroups(prod)) {
    if (s.order() != 2) continue;
    try {
      product_quotient_check(fs, prod, whole_group(prod), s);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotNormal);
    }
    return;
  }
}

TEST(Serialization, RoundTripCatalogue) {
  for (const auto& ng : small_groups_up_to_8()) {
    std::stringstream ss;
    write_table(ss, ng.group);
    const TableGroup back = read_table(ss);
    EXPECT_EQ(back, ng.group) << ng.name;
  }
}

TEST(Serialization, HeaderFormat) {
  std::stringstream ss;
  write_table(ss, cyclic(2));
  EXPECT_EQ(ss.str(), "order 2\n0 1\n1 0\n");
}

TEST(Serialization, MalformedInput) {
  std::stringstream ss("order 2\n0 1\n1");
  EXPECT_THROW(read_table(ss), Error);
}

// Structural invariants over the catalogue and some products.
TEST(Invariants, StructureOnCatalogueAndProducts) {
  std::vector<TableGroup> groups;
  for (const auto& ng : small_groups_up_to_8()) groups.push_back(ng.group);
  groups.push_back(direct_product(symmetric(3), cyclic(4)));
  groups.push_back(direct_product(quaternion(), cyclic(3)));
  groups.push_back(alternating(4));
  groups.push_back(symmetric(4));
  groups.push_back(heisenberg(5).table);
  for (const auto& g : groups) {
    const StructureReport r = structure_report(g);
    EXPECT_EQ(r.order % r.exponent, 0u);
    EXPECT_EQ(r.order % r.derived_order, 0u);
    EXPECT_TRUE(is_normal(g, center(g)));
    EXPECT_TRUE(is_normal(g, derived_subgroup(g)));
    EXPECT_EQ(r.order == 1 || r.derived_length == 1, r.is_abelian);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      if (g.order() % p) continue;
      const std::size_t rank = frattini_quotient_rank(g, p);
      std::size_t expected = 0, pk = 1;
      for (std::size_t i = 0; i < rank; ++i) {
        expected += pk;
        pk *= p;
      }
      EXPECT_EQ(index_p_subgroups(g, p).size(), expected);
    }
  }
}

TEST(Invariants, ConjugacyClassesPartition) {
  for (const auto& g : {symmetric(4), dihedral(4), heisenberg(3).table}) {
    std::size_t total = 0;
    for (const auto& c : conjugacy_classes(g)) {
      total += c.size();
      EXPECT_EQ(g.order() % c.size(), 0u);
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(Invariants, RandomGeneratedSubgroupsAreClosed) {
  std::mt19937_64 rng(5);
  const TableGroup g = symmetric(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Elem gens[] = {static_cast<Elem>(rng() % g.order()), static_cast<Elem>(rng() % g.order())};
    const Subgroup s = generate(g, gens);
    EXPECT_TRUE(is_subgroup(g, s.members));
    EXPECT_EQ(g.order() % s.order(), 0u);
    EXPECT_TRUE(s.contains(gens[0]) && s.contains(gens[1]));
  }
}
