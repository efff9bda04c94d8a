#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "localdeg/eisenstein.hpp"
#include "localdeg/error.hpp"
#include "localdeg/kummer.hpp"

using namespace localdeg;

namespace {

using C = std::complex<double>;

const C kW{-0.5, std::sqrt(3.0) / 2};

C to_complex(const EisensteinRat& x) {
  return C(static_cast<double>(x.a)) + C(static_cast<double>(x.b)) * kW;
}

// Evaluates c0 + c1 t + c2 t^2 at t = w^k cbrt(a) (real cube root).
C embed(const CubicElt& x, double a, int k) {
  C t = std::cbrt(a);
  for (int i = 0; i < k; ++i) t *= kW;
  return to_complex(x.c[0]) + to_complex(x.c[1]) * t + to_complex(x.c[2]) * t * t;
}

EisensteinInt random_eis(std::mt19937_64& rng, int range) {
  auto r = [&] { return BigInt(static_cast<long>(rng() % (2 * range + 1)) - range); };
  return {r(), r()};
}

BigInt bmod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  return r < 0 ? r + m : r;
}

// Brute-force valuation oracle, capped at 2: images mod q^2 of w and of the
// cube roots of a are found by exhaustive search.
std::vector<int> brute_valuations(const TowerLevel& lv) {
  const BigInt q = lv.q, q2 = q * q;
  std::vector<BigInt> ws;
  for (BigInt w = 0; w < q2; ++w) {
    if (bmod(w * w + w + 1, q2) == 0) ws.push_back(w);
  }
  EXPECT_EQ(ws.size(), 2u);
  // The root at pi first.
  if (bmod(lv.pi.a + lv.pi.b * ws[0], q) != 0) std::swap(ws[0], ws[1]);
  std::vector<BigInt> rhos;
  for (std::uint64_t r : lv.cube_roots) {
    for (BigInt t = 0; t < q; ++t) {
      const BigInt c = r + t * q;
      if (bmod(c * c * c - lv.a, q2) == 0) rhos.push_back(c);
    }
  }
  std::vector<int> out;
  for (const BigInt& w : ws) {
    const BigInt image = bmod(lv.gamma.a + lv.gamma.b * w, q2);
    for (const BigInt& rho : rhos) {
      const BigInt d = bmod(rho - image, q2);
      out.push_back(d == 0 ? 2 : (d % q == 0 ? 1 : 0));
    }
  }
  return out;
}

}  // namespace

TEST(Eisenstein, NormIsMultiplicative) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const EisensteinInt x = random_eis(rng, 1000), y = random_eis(rng, 1000);
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
  }
}

TEST(Eisenstein, OmegaRelation) {
  const EisensteinInt w = EisensteinInt::omega();
  EXPECT_EQ(w * w + w + EisensteinInt{1}, EisensteinInt{});
  EXPECT_EQ(w * w * w, EisensteinInt{1});
  EXPECT_EQ(w.conj(), w * w);
}

TEST(Eisenstein, DivmodRemainderIsSmaller) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const EisensteinInt x = random_eis(rng, 10000), y = random_eis(rng, 100);
    if (y.is_zero()) continue;
    const auto [qt, r] = divmod(x, y);
    EXPECT_EQ(qt * y + r, x);
    EXPECT_LT(r.norm(), y.norm());
  }
  EXPECT_THROW(divmod(EisensteinInt{1}, EisensteinInt{}), Error);
}

TEST(Eisenstein, GcdDividesBoth) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const EisensteinInt c = random_eis(rng, 30);
    const EisensteinInt x = c * random_eis(rng, 50), y = c * random_eis(rng, 50);
    if (x.is_zero() || y.is_zero()) continue;
    const EisensteinInt g = gcd(x, y);
    EXPECT_TRUE(divides(g, x));
    EXPECT_TRUE(divides(g, y));
    if (!c.is_zero()) {
      EXPECT_TRUE(divides(c, g));
    }
    const ExtendedGcd e = extended_gcd(x, y);
    EXPECT_EQ(e.s * x + e.t * y, e.g);
    EXPECT_EQ(e.g.norm(), g.norm());
  }
}

TEST(Eisenstein, CrtVerifiedByReduction) {
  std::mt19937_64 rng(4);
  int solved = 0;
  for (int i = 0; i < 300; ++i) {
    const EisensteinInt m1 = random_eis(rng, 40), m2 = random_eis(rng, 40);
    if (m1.norm() < 2 || m2.norm() < 2 || !gcd(m1, m2).is_unit()) continue;
    const EisensteinInt r1 = random_eis(rng, 100), r2 = random_eis(rng, 100);
    const EisensteinInt z = crt(r1, m1, r2, m2);
    EXPECT_TRUE(divides(m1, z - r1));
    EXPECT_TRUE(divides(m2, z - r2));
    ++solved;
  }
  EXPECT_GT(solved, 50);
  try {
    crt(EisensteinInt{1}, EisensteinInt{2}, EisensteinInt{0}, EisensteinInt{4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
}

TEST(Eisenstein, Split) {
  const SplitData s7 = eisenstein_split(7);
  EXPECT_FALSE(s7.inert);
  EXPECT_EQ(s7.pi, (EisensteinInt{3, 1}));
  EXPECT_EQ(eisenstein_split(31).pi, (EisensteinInt{6, 1}));
  EXPECT_TRUE(eisenstein_split(5).inert);
  try {
    eisenstein_split(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Ramified);
  }
  for (std::uint64_t q : {7u, 13u, 19u, 31u, 37u, 43u, 97u, 1009u}) EXPECT_EQ(eisenstein_split(q).pi.norm(), BigInt(q));
}

TEST(Eisenstein, OmegaImage) {
  const EisensteinInt pi{6, 1};
  const BigInt w = omega_image(pi, 31, 3);
  const BigInt m = 31 * 31 * 31;
  EXPECT_EQ(bmod(w * w + w + 1, m), 0);
  EXPECT_EQ(reduce_at(pi, w, 31), 0);
}

TEST(Eisenstein, RationalInverse) {
  const EisensteinRat x{BigRational(3, 2), BigRational(-1, 5)};
  const EisensteinRat one = x * x.inverse();
  EXPECT_EQ(one, EisensteinRat{1});
  EXPECT_THROW(EisensteinRat{}.inverse(), Error);
  EXPECT_FALSE(x.as_integer().has_value());
  EXPECT_EQ(*EisensteinRat(EisensteinInt{4, -2}).as_integer(), (EisensteinInt{4, -2}));
}

TEST(CubicField, NormMatchesComplexEmbedding) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const CubicElt x{{EisensteinRat{random_eis(rng, 5)}, EisensteinRat{random_eis(rng, 5)},
                      EisensteinRat{random_eis(rng, 5)}}};
    const EisensteinRat n = cubic_norm(2, x);
    const C prod = embed(x, 2, 0) * embed(x, 2, 1) * embed(x, 2, 2);
    EXPECT_NEAR(std::abs(prod - to_complex(n)), 0.0, 1e-6 * (1 + std::abs(prod)));
    if (!n.is_zero()) {
      EXPECT_EQ(cubic_mul(2, x, cubic_inverse(2, x)), CubicElt::scalar(EisensteinRat{1}));
    }
  }
}

TEST(CubeRoots, TwoModThirtyOne) {
  EXPECT_EQ(cube_roots_mod(2, 31), (std::vector<std::uint64_t>{4, 7, 20}));
  // Lift of 4 mod 31^2 by exhaustive search over 4 + 31 t.
  BigInt found = -1;
  for (int t = 0; t < 31; ++t) {
    const BigInt c = 4 + 31 * t;
    if (bmod(c * c * c - 2, 961) == 0) found = c;
  }
  EXPECT_EQ(found, 283);
  EXPECT_EQ(hensel_lift_cube_root(2, 4, 31, 2), 283);
  const BigInt r4 = hensel_lift_cube_root(2, 7, 31, 4);
  EXPECT_EQ(bmod(r4 * r4 * r4 - 2, BigInt(31) * 31 * 31 * 31), 0);
}

TEST(Parameters, FirstChoices) {
  EXPECT_EQ(next_a({}), 2u);
  EXPECT_EQ(next_q(2, {}), 31u);
  const ParameterChoice c = choose_parameters(2, 1);
  EXPECT_EQ(c.a, (std::vector<std::uint64_t>{2, 5}));
  EXPECT_EQ(c.q, (std::vector<std::uint64_t>{31, 13}));
}

TEST(Parameters, SearchExhausted) {
  KummerOptions opt;
  opt.prime_bound = 20;
  try {
    emit_tower(1, 1, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SearchExhausted);
  }
}

TEST(Tower, EmptyForMZero) {
  const RadicalTower t = emit_tower(0, 1);
  EXPECT_TRUE(t.levels.empty());
  EXPECT_TRUE(t.generators.empty());
  for (const auto& c : check_tower(t)) EXPECT_TRUE(c.passed) << c.name;
}

TEST(Tower, M1Seed7) {
  const RadicalTower t = emit_tower(1, 7);
  ASSERT_EQ(t.levels.size(), 1u);
  EXPECT_EQ(t.levels[0].a, 2u);
  EXPECT_EQ(t.levels[0].q, 31u);
  EXPECT_EQ(t.generators.size(), 3u);
  for (const auto& c : check_tower(t)) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Tower, M2FullCheck) {
  const RadicalTower t = emit_tower(2, 1);
  ASSERT_EQ(t.levels.size(), 2u);
  EXPECT_EQ(t.generators.size(), 5u);
  const auto checks = check_tower(t);
  EXPECT_GE(checks.size(), 20u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  for (const auto& lv : t.levels) {
    EXPECT_EQ(lv.valuations, (std::vector<int>{1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(lv.valuations_recheck, lv.valuations);
    EXPECT_EQ(brute_valuations(lv), lv.valuations) << "a = " << lv.a;
    EXPECT_EQ(lv.b, EisensteinInt{BigInt(lv.a)} - lv.gamma * lv.gamma * lv.gamma);
    EXPECT_TRUE(lv.norm_matches_product);
    EXPECT_TRUE(lv.omega_identity);
    EXPECT_NE(lv.noncube_residue_prime, 0u);
  }
  EXPECT_EQ(t.levels[0].gamma, (EisensteinInt{30, -254}));
  EXPECT_EQ(t.levels[1].gamma, (EisensteinInt{198, 38}));
}

TEST(Tower, OmegaIdentityInComplexEmbedding) {
  const RadicalTower t = emit_tower(2, 1);
  for (const auto& lv : t.levels) {
    const double a = static_cast<double>(lv.a);
    for (int k = 0; k < 3; ++k) {
      const C x1 = embed(lv.x, a, (k + 1) % 3), x2 = embed(lv.x, a, (k + 2) % 3);
      const C lhs = embed(lv.omega, a, k) * x1 * x2 * x2;
      const C b = to_complex(EisensteinRat{lv.b});
      EXPECT_NEAR(std::abs(lhs - b * b) / std::abs(b * b), 0.0, 1e-9);
    }
  }
}

TEST(Tower, CheckerCatchesCorruption) {
  RadicalTower t = emit_tower(1, 1);
  t.levels[0].gamma = t.levels[0].gamma + EisensteinInt{1};
  bool failed = false;
  for (const auto& c : check_tower(t)) failed = failed || !c.passed;
  EXPECT_TRUE(failed);
}

TEST(Tower, Deterministic) {
  const RadicalTower a = emit_tower(2, 3), b = emit_tower(2, 3);
  ASSERT_EQ(a.levels.size(), b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    EXPECT_EQ(a.levels[i].gamma, b.levels[i].gamma);
    EXPECT_EQ(a.levels[i].b, b.levels[i].b);
  }
  EXPECT_EQ(a.trace, b.trace);
}

TEST(FormalGalois, AllSmallRanks) {
  for (std::uint32_t m : {1u, 2u, 3u}) {
    const FormalGaloisVerdict v = verify_formal_galois(m, 1);
    std::size_t order = 1, kernel = 1;
    for (std::uint32_t i = 0; i < 2 * m + 1; ++i) order *= 3;
    for (std::uint32_t i = 1; i < m; ++i) kernel *= 3;
    EXPECT_TRUE(v.verdict) << m;
    EXPECT_EQ(v.order, order);
    EXPECT_EQ(v.exponent, 3u);
    EXPECT_TRUE(v.extraspecial);
    EXPECT_TRUE(v.projection_homomorphism);
    EXPECT_TRUE(v.projection_surjective);
    EXPECT_EQ(v.kernel_order, kernel);
    EXPECT_TRUE(v.kernel_fixes_radical);
    EXPECT_TRUE(v.fixers_are_kernel);
    EXPECT_TRUE(v.z_fix_a_b);
    EXPECT_TRUE(v.degree_accounting);
  }
  EXPECT_EQ(verify_formal_galois(2).method, "table-quotient");
  EXPECT_EQ(verify_formal_galois(3).method, "symplectic-model");
  EXPECT_FALSE(verify_formal_galois(3).projection_exhaustive);
}

TEST(FormalGalois, ZActionsOnProductRadical) {
  // (z1, z2^2): 1 + 2 = 3 = 0 mod 3 fixes the radical; z1 alone multiplies by zeta.
  auto fixes = [](std::vector<int> a) {
    int s = 0;
    for (int x : a) s += x;
    return s % 3 == 0;
  };
  EXPECT_TRUE(fixes({1, 2}));
  EXPECT_FALSE(fixes({1, 0}));
  const FormalGaloisVerdict v = verify_formal_galois(2);
  EXPECT_EQ(v.product_order, BigInt(729));
  EXPECT_EQ(v.quotient_order, BigInt(243));
}

TEST(FormalGalois, RankOutOfRange) {
  EXPECT_THROW(verify_formal_galois(0), Error);
  EXPECT_THROW(verify_formal_galois(4), Error);
}

TEST(Embedding, ThreeSevenOne) {
  const EmbeddingPlan e = embedding_plan(3, 7, 1, 100, 1);
  EXPECT_EQ(e.symbols.size(), 27u);
  EXPECT_EQ(e.lambda_rank, 27u);
  EXPECT_EQ(e.image_order, big_pow(7, 27));
  EXPECT_TRUE(e.lambda_injective);
  EXPECT_TRUE(e.lambda_zero_is_identity);
  EXPECT_TRUE(e.basis_changes_one_radical);
  EXPECT_TRUE(e.conjugation_translates);
  EXPECT_EQ(e.samples, 100u);
  EXPECT_EQ(e.composition_mismatches, 0u);
}

TEST(Embedding, NoRootOfUnity) {
  try {
    embedding_plan(3, 5, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoRootOfUnity);
  }
}

// Symbol automorphisms compose like the semidirect product.
TEST(Invariants, SymbolLawMatchesSemidirect) {
  const SemidirectGroup g(3, 7, 1);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const SDElement x = g.random(rng), y = g.random(rng);
    EXPECT_EQ(compose(symbol_automorphism(g, x), symbol_automorphism(g, y), g), symbol_automorphism(g, g.mul(x, y)));
  }
  // Zero algebra part and trivial complement: the identity map.
  const SymbolAutomorphism id = symbol_automorphism(g, g.identity());
  EXPECT_EQ(id.s, 0u);
  for (Fq c : id.c) EXPECT_EQ(c, 0u);
}
