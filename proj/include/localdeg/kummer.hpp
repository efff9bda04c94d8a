#pragma once

// Radical towers over k = Q(w) realizing extraspecial 3-groups, and the
// symbol-level models used to check their Galois-theoretic claims.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "localdeg/bigint.hpp"
#include "localdeg/eisenstein.hpp"
#include "localdeg/fq.hpp"
#include "localdeg/semidirect.hpp"

namespace localdeg {

/// c0 + c1 t + c2 t^2 in k(t), t^3 = a, with sigma(t) = w t.
struct CubicElt {
  std::array<EisensteinRat, 3> c;

  static CubicElt scalar(const EisensteinRat& x) { return {{x, EisensteinRat{}, EisensteinRat{}}}; }
  bool is_scalar() const { return c[1].is_zero() && c[2].is_zero(); }
  std::string to_string() const;
  friend bool operator==(const CubicElt&, const CubicElt&) = default;
};

CubicElt cubic_add(const CubicElt& x, const CubicElt& y);
CubicElt cubic_mul(const BigInt& a, const CubicElt& x, const CubicElt& y);
/// sigma^k(x).
CubicElt cubic_sigma(const CubicElt& x, unsigned k);
/// x sigma(x) sigma^2(x); throws logic_error if the product is not in k.
EisensteinRat cubic_norm(const BigInt& a, const CubicElt& x);
/// sigma(x) sigma^2(x) / N(x); throws DivisionFailure for 0.
CubicElt cubic_inverse(const BigInt& a, const CubicElt& x);

struct KummerOptions {
  /// Searches for a_i, q_i stop (SearchExhausted) past this prime.
  std::uint64_t prime_bound = 20000;
  /// Number of gamma -> gamma + t q^2 shifts tried for the S_i condition.
  std::uint64_t max_shift = 2000;
  /// Random primes tried when looking for a residue field without a cube root of a_i.
  std::size_t evidence_attempts = 200;
};

/// Data of one level i of the tower.
struct TowerLevel {
  std::uint64_t a = 0;  // rational prime, not a cube in k
  std::uint64_t q = 0;  // q = 1 mod 3, a^((q-1)/3) = 1 mod q
  EisensteinInt pi;     // N(pi) = q, the prime of k carrying the beta_j
  /// Cube roots of a mod q, ascending; the first one defines beta_1.
  std::vector<std::uint64_t> cube_roots;
  /// Hensel lifts of cube_roots mod q^2.
  std::vector<BigInt> lifted_roots;
  /// Image of w mod q^2 under Z[w] -> Z[w]/pi^2.
  BigInt omega_at_pi;
  EisensteinInt gamma;     // x = cbrt(a) - gamma
  std::uint64_t shift = 0;  // gamma = CRT solution + shift q^2
  /// v at beta_1..beta_3 (above pi), then at the three primes above conj(pi).
  std::vector<int> valuations;
  /// The same valuations recomputed mod q^4.
  std::vector<int> valuations_recheck;
  EisensteinInt b;  // N(x) = a - gamma^3
  CubicElt x;
  CubicElt omega;   // b^2 / (sigma(x) sigma^2(x)^2) = x^2 sigma(x)
  bool norm_matches_product = false;
  bool omega_identity = false;  // omega sigma(x) sigma^2(x)^2 = b^2 exactly
  /// A prime l = 1 mod 3 with a not a cube mod l, or 0 if none was found.
  std::uint64_t noncube_residue_prime = 0;
};

struct RadicalTower {
  std::uint32_t p = 3;
  std::uint32_t m = 0;
  std::uint64_t seed = 0;
  std::vector<TowerLevel> levels;
  std::vector<std::string> generators;
  std::vector<std::string> trace;
};

struct ParameterChoice {
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> q;
};

/// Cube roots of a mod q in ascending order.
std::vector<std::uint64_t> cube_roots_mod(std::uint64_t a, std::uint64_t q);
/// Lift of a simple root r of x^3 - a mod q to a root mod q^k.
BigInt hensel_lift_cube_root(std::uint64_t a, std::uint64_t r, std::uint64_t q, std::uint64_t k);

/// Smallest admissible a given the previous levels: a prime != 3, unused,
/// prime to every earlier b_j.
std::uint64_t next_a(const std::vector<TowerLevel>& previous, const KummerOptions& opt = {});
/// Smallest q = 1 mod 3 with a^((q-1)/3) = 1 mod q, distinct from earlier
/// q_j and a_j, not dividing any N(b_j), and not dividing 3a.
std::uint64_t next_q(std::uint64_t a, const std::vector<TowerLevel>& previous,
                     const KummerOptions& opt = {});

/// Builds gamma (and the valuation certificate) for one level. The previous
/// levels supply the S_i condition: gcd(a - gamma^3, a_j) and
/// gcd(a - gamma^3, b_j) must be units.
TowerLevel solve_valuation_system(std::uint64_t a, std::uint64_t q,
                                  const std::vector<TowerLevel>& previous,
                                  const KummerOptions& opt = {});

/// Fills b, x, omega and the exact identity checks of a level.
void norm_and_omega(TowerLevel& level);

ParameterChoice choose_parameters(std::uint32_t m, std::uint64_t seed, const KummerOptions& opt = {});
RadicalTower emit_tower(std::uint32_t m, std::uint64_t seed, const KummerOptions& opt = {});

struct ConditionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Recomputes every side condition from the recorded a_i, q_i, pi_i, gamma_i
/// alone, with its own root finding and lifting.
std::vector<ConditionCheck> check_tower(const RadicalTower& tower);

struct FormalGaloisVerdict {
  std::uint32_t p = 3;
  std::uint32_t m = 0;
  std::string method;  // "table-quotient" or "symplectic-model"
  std::size_t order = 0;
  std::size_t exponent = 0;
  bool extraspecial = false;
  /// H^m -> E_m, ((u_i, a_i))_i -> (u, sum a_i): checked on all pairs when
  /// exhaustive, else on seeded samples.
  bool projection_homomorphism = false;
  bool projection_exhaustive = false;
  std::size_t projection_samples = 0;
  bool projection_surjective = false;
  std::size_t kernel_order = 0;
  /// Central exponent vectors (a_1..a_m) act on cbrt(w_1...w_m) by
  /// zeta^(sum a_i); the fixers are exactly the kernel.
  bool kernel_fixes_radical = false;
  bool fixers_are_kernel = false;
  /// Each z_i fixes cbrt(a_j), cbrt(b_j) for all j.
  bool z_fix_a_b = false;
  BigInt product_order;  // p^(3m)
  BigInt quotient_order;  // p^(3m) / p^(m-1)
  bool degree_accounting = false;  // quotient_order == p^(2m) * p == p^(2m+1)
  std::vector<std::string> z_actions;
  bool verdict = false;
};

/// Purely formal; m in 1..3 (InvalidArgument otherwise). The seed drives the
/// sampled homomorphism check for m = 3.
FormalGaloisVerdict verify_formal_galois(std::uint32_t m, std::uint64_t seed = 1);

/// (c, s) sends the radical r_t to zeta_q^(c_t) r_(s t).
struct SymbolAutomorphism {
  std::vector<Fq> c;  // indexed by elements of E
  Elem s = 0;
  friend bool operator==(const SymbolAutomorphism&, const SymbolAutomorphism&) = default;
};

struct EmbeddingPlan {
  std::uint32_t p = 0, q = 0, m = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> symbols;  // one radical per element of E_m
  std::size_t lambda_rank = 0;
  BigInt image_order;  // q^rank
  bool lambda_injective = false;
  bool lambda_zero_is_identity = false;
  /// lambda(delta_s) changes exactly the radical indexed by s.
  bool basis_changes_one_radical = false;
  /// translate(e) lambda(delta_t) translate(e)^-1 = lambda(delta_(e t)).
  bool conjugation_translates = false;
  std::size_t samples = 0;
  std::size_t composition_mismatches = 0;
};

SymbolAutomorphism compose(const SymbolAutomorphism& f, const SymbolAutomorphism& g, const SemidirectGroup& grp);
/// lambda(w) o translate(e).
SymbolAutomorphism symbol_automorphism(const SemidirectGroup& grp, const SDElement& x);

/// Throws NoRootOfUnity unless p divides q - 1.
EmbeddingPlan embedding_plan(std::uint32_t p, std::uint32_t q, std::uint32_t m,
                             std::size_t samples = 100, std::uint64_t seed = 1);

}  // namespace localdeg
