#include "localdeg/kummer.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "localdeg/error.hpp"
#include "localdeg/extraspecial.hpp"

namespace localdeg {

namespace {

BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  return r < 0 ? r + m : r;
}

BigInt inv_mod(const BigInt& x, const BigInt& m) {
  BigInt r0 = mod(x, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    BigInt t = r0 / r1;
    r0 = std::exchange(r1, r0 - t * r1);
    s0 = std::exchange(s1, s0 - t * s1);
  }
  if (r0 != 1) throw std::logic_error("inv_mod: not invertible");
  return mod(s0, m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

/// v_q(x) computed from x mod q^cap, capped at cap.
int truncated_valuation(const BigInt& x, std::uint64_t q, int cap) {
  BigInt r = mod(x, big_pow(q, static_cast<std::uint64_t>(cap)));
  if (r == 0) return cap;
  int v = 0;
  while (r % q == 0) {
    r /= q;
    ++v;
  }
  return v;
}

/// Valuations at the three primes above pi, then the three above conj(pi),
/// certified from arithmetic mod q^k.
std::vector<int> level_valuations(const TowerLevel& lv, std::uint64_t k) {
  const BigInt modulus = big_pow(lv.q, k);
  const BigInt w = omega_image(lv.pi, lv.q, k);
  const BigInt wbar = mod(-1 - w, modulus);
  std::vector<int> v;
  for (const BigInt& image : {reduce_at(lv.gamma, w, modulus), reduce_at(lv.gamma, wbar, modulus)}) {
    for (std::uint64_t r : lv.cube_roots) {
      const BigInt rho = hensel_lift_cube_root(lv.a, r, lv.q, k);
      v.push_back(truncated_valuation(rho - image, lv.q, static_cast<int>(k)));
    }
  }
  return v;
}

bool coprime(const EisensteinInt& x, const EisensteinInt& y) { return gcd(x, y).is_unit(); }

bool s_condition(const EisensteinInt& b, const std::vector<TowerLevel>& previous) {
  for (const auto& lv : previous) {
    if (!coprime(b, EisensteinInt{BigInt(lv.a)}) || !coprime(b, lv.b)) return false;
  }
  return true;
}

const EisensteinRat kOmega{0, 1};
const EisensteinRat kOmega2{-1, -1};

}  // namespace

// ---------------------------------------------------------------------------
// k(cbrt(a))

std::string CubicElt::to_string() const {
  return "[" + c[0].to_string() + ", " + c[1].to_string() + ", " + c[2].to_string() + "]";
}

CubicElt cubic_add(const CubicElt& x, const CubicElt& y) {
  return {{x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2]}};
}

CubicElt cubic_mul(const BigInt& a, const CubicElt& x, const CubicElt& y) {
  const EisensteinRat ar{BigRational(a)};
  return {{x.c[0] * y.c[0] + ar * (x.c[1] * y.c[2] + x.c[2] * y.c[1]),
           x.c[0] * y.c[1] + x.c[1] * y.c[0] + ar * (x.c[2] * y.c[2]),
           x.c[0] * y.c[2] + x.c[1] * y.c[1] + x.c[2] * y.c[0]}};
}

CubicElt cubic_sigma(const CubicElt& x, unsigned k) {
  switch (k % 3) {
    case 0: return x;
    case 1: return {{x.c[0], kOmega * x.c[1], kOmega2 * x.c[2]}};
    default: return {{x.c[0], kOmega2 * x.c[1], kOmega * x.c[2]}};
  }
}

EisensteinRat cubic_norm(const BigInt& a, const CubicElt& x) {
  const CubicElt n = cubic_mul(a, cubic_mul(a, x, cubic_sigma(x, 1)), cubic_sigma(x, 2));
  if (!n.is_scalar()) throw std::logic_error("cubic_norm: product of conjugates not in k");
  return n.c[0];
}

CubicElt cubic_inverse(const BigInt& a, const CubicElt& x) {
  const EisensteinRat n = cubic_norm(a, x);
  if (n.is_zero()) throw Error(Errc::DivisionFailure, "inverse of zero in k(cbrt(a))");
  return cubic_mul(a, cubic_mul(a, cubic_sigma(x, 1), cubic_sigma(x, 2)), CubicElt::scalar(n.inverse()));
}

// ---------------------------------------------------------------------------
// Parameter search

std::vector<std::uint64_t> cube_roots_mod(std::uint64_t a, std::uint64_t q) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < q; ++x) {
    if (pow_mod(x, 3, q) == a % q) roots.push_back(x);
  }
  return roots;
}

BigInt hensel_lift_cube_root(std::uint64_t a, std::uint64_t r, std::uint64_t q, std::uint64_t k) {
  const BigInt modulus = big_pow(q, k);
  BigInt x = r;
  for (std::uint64_t prec = 1; prec < k; prec *= 2) {
    const BigInt f = x * x * x - a;
    x = mod(x - f * inv_mod(3 * x * x, modulus), modulus);
  }
  return mod(x, modulus);
}

std::uint64_t next_a(const std::vector<TowerLevel>& previous, const KummerOptions& opt) {
  for (std::uint64_t c = 2; c <= opt.prime_bound; ++c) {
    if (c == 3 || !is_prime(c)) continue;
    bool ok = true;
    for (const auto& lv : previous) {
      if (lv.a == c || lv.b.norm() % c == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  throw Error(Errc::SearchExhausted, "no admissible a below " + std::to_string(opt.prime_bound));
}

std::uint64_t next_q(std::uint64_t a, const std::vector<TowerLevel>& previous, const KummerOptions& opt) {
  for (std::uint64_t c = 7; c <= opt.prime_bound; c += 6) {
    if (!is_prime(c) || c == a || pow_mod(a, (c - 1) / 3, c) != 1) continue;
    bool ok = true;
    for (const auto& lv : previous) {
      if (lv.q == c || lv.a == c || lv.b.norm() % c == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  throw Error(Errc::SearchExhausted,
              "no admissible q below " + std::to_string(opt.prime_bound) + " for a = " + std::to_string(a));
}

// ---------------------------------------------------------------------------
// Pipeline

TowerLevel solve_valuation_system(std::uint64_t a, std::uint64_t q, const std::vector<TowerLevel>& previous,
                                  const KummerOptions& opt) {
  if (q % 3 == 0 || a % q == 0) throw Error(Errc::InvalidArgument, "q must not divide 3a");
  TowerLevel lv;
  lv.a = a;
  lv.q = q;
  const SplitData split = eisenstein_split(q);
  if (split.inert) throw Error(Errc::InvalidArgument, "q is inert in k");
  lv.pi = split.pi;
  lv.cube_roots = cube_roots_mod(a, q);
  if (lv.cube_roots.size() != 3) {
    throw Error(Errc::NoCubeRoot, std::to_string(a) + " has no three cube roots mod " + std::to_string(q));
  }
  for (std::uint64_t r : lv.cube_roots) lv.lifted_roots.push_back(hensel_lift_cube_root(a, r, q, 2));
  lv.omega_at_pi = omega_image(lv.pi, q, 2);

  const BigInt q2 = BigInt(q) * q;
  const EisensteinInt pi2 = lv.pi * lv.pi;
  const EisensteinInt pibar2 = lv.pi.conj() * lv.pi.conj();
  // gamma = rho_1 + q (mod pi^2) gives v = 1 at beta_1; gamma = 0 (mod conj(pi)^2)
  // keeps gamma away from every cube root there, as q does not divide a.
  const EisensteinInt base = crt(EisensteinInt{lv.lifted_roots[0] + q}, pi2, EisensteinInt{0}, pibar2);
  bool found = false;
  for (std::uint64_t t = 0; t <= opt.max_shift && !found; ++t) {
    const EisensteinInt gamma = base + EisensteinInt{q2 * t};
    if (gamma.is_zero()) continue;
    if (!s_condition(EisensteinInt{BigInt(a)} - pow(gamma, 3), previous)) continue;
    lv.gamma = gamma;
    lv.shift = t;
    found = true;
  }
  if (!found) {
    throw Error(Errc::SearchExhausted, "no gamma satisfying the S condition within " +
                                           std::to_string(opt.max_shift) + " shifts");
  }
  lv.valuations = level_valuations(lv, 2);
  lv.valuations_recheck = level_valuations(lv, 4);
  const std::vector<int> expected{1, 0, 0, 0, 0, 0};
  if (lv.valuations != expected || lv.valuations_recheck != expected) {
    throw std::logic_error("solve_valuation_system: valuation certificate failed");
  }
  return lv;
}

void norm_and_omega(TowerLevel& lv) {
  const BigInt a = lv.a;
  lv.b = EisensteinInt{a} - pow(lv.gamma, 3);
  lv.x = {{EisensteinRat{-lv.gamma}, EisensteinRat{1}, EisensteinRat{}}};
  lv.norm_matches_product = cubic_norm(a, lv.x) == EisensteinRat{lv.b};

  const CubicElt s1 = cubic_sigma(lv.x, 1);
  const CubicElt s2 = cubic_sigma(lv.x, 2);
  const CubicElt den = cubic_mul(a, s1, cubic_mul(a, s2, s2));
  const EisensteinRat b2 = EisensteinRat{lv.b * lv.b};
  lv.omega = cubic_mul(a, CubicElt::scalar(b2), cubic_inverse(a, den));
  lv.omega_identity = cubic_mul(a, lv.omega, den) == CubicElt::scalar(b2);
}

RadicalTower emit_tower(std::uint32_t m, std::uint64_t seed, const KummerOptions& opt) {
  RadicalTower t;
  t.m = m;
  t.seed = seed;
  if (m == 0) {
    t.trace.push_back("m = 0: empty tower, base field k = Q(w)");
    return t;
  }
  std::mt19937_64 rng(seed);
  t.trace.push_back("omega_i uses the conjugate product over j = 1..p-1");
  for (std::uint32_t i = 1; i <= m; ++i) {
    const std::uint64_t a = next_a(t.levels, opt);
    const std::uint64_t q = next_q(a, t.levels, opt);
    TowerLevel lv = solve_valuation_system(a, q, t.levels, opt);
    norm_and_omega(lv);

    for (std::size_t k = 0; k < opt.evidence_attempts; ++k) {
      const std::uint64_t l = 7 + rng() % 20000;
      if (l % 3 != 1 || l == a || !is_prime(l)) continue;
      if (pow_mod(a, (l - 1) / 3, l) != 1) {
        lv.noncube_residue_prime = l;
        break;
      }
    }

    const std::string si = std::to_string(i);
    t.trace.push_back("a_" + si + " = " + std::to_string(a) +
                      ": rational prime, valuation 1 or 2 at the primes of k above it, so not a cube in k");
    t.trace.push_back("q_" + si + " = " + std::to_string(q) + ": " + std::to_string(a) + "^" +
                      std::to_string((q - 1) / 3) + " = 1 mod " + std::to_string(q) + ", pi = " +
                      lv.pi.to_string());
    t.trace.push_back("gamma_" + si + " = " + lv.gamma.to_string() + " (shift " + std::to_string(lv.shift) +
                      "), valuations certified mod q^2 and mod q^4");
    t.trace.push_back("b_" + si + " = a - gamma^3 = " + lv.b.to_string());
    t.levels.push_back(std::move(lv));
    t.generators.push_back("cbrt(a" + si + ")");
    t.generators.push_back("cbrt(b" + si + ")");
  }
  std::string prod;
  for (std::uint32_t i = 1; i <= m; ++i) prod += (i > 1 ? "*omega" : "omega") + std::to_string(i);
  t.generators.push_back("cbrt(" + prod + ")");
  return t;
}

ParameterChoice choose_parameters(std::uint32_t m, std::uint64_t seed, const KummerOptions& opt) {
  if (m == 0) throw Error(Errc::InvalidArgument, "m must be positive");
  const RadicalTower t = emit_tower(m, seed, opt);
  ParameterChoice c;
  for (const auto& lv : t.levels) {
    c.a.push_back(lv.a);
    c.q.push_back(lv.q);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Independent checker

namespace {

/// Lifts a root of f mod q to mod q^k one q-adic digit at a time.
template <class F>
BigInt digit_lift(const F& f, const BigInt& root, std::uint64_t q, std::uint64_t k) {
  BigInt r = root, qi = q;
  for (std::uint64_t i = 1; i < k; ++i) {
    const BigInt next = qi * q;
    bool ok = false;
    for (std::uint64_t d = 0; d < q; ++d) {
      const BigInt cand = r + qi * d;
      if (mod(f(cand), next) == 0) {
        r = cand;
        ok = true;
        break;
      }
    }
    if (!ok) return -1;
    qi = next;
  }
  return r;
}

}  // namespace

std::vector<ConditionCheck> check_tower(const RadicalTower& tower) {
  std::vector<ConditionCheck> out;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  if (tower.m == 0) {
    add("empty tower", tower.levels.empty() && tower.generators.empty(), "no generators over k");
    return out;
  }
  add("generator count", tower.generators.size() == 2 * std::size_t{tower.m} + 1 && tower.levels.size() == tower.m,
      std::to_string(tower.generators.size()) + " generators");

  constexpr std::uint64_t kPrec = 4;
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    const TowerLevel& lv = tower.levels[i];
    const std::string si = std::to_string(i + 1);
    const BigInt a = lv.a;
    const EisensteinInt ea{a};

    add("a" + si + " not a cube in k", is_prime(lv.a),
        std::to_string(lv.a) + " is a rational prime: its valuation at a prime of k above it is 1 or 2");

    bool coprime_a = true;
    std::string why = "gcd units with all earlier a_j, b_j";
    for (std::size_t j = 0; j < i; ++j) {
      const auto& pj = tower.levels[j];
      if (!gcd(ea, EisensteinInt{BigInt(pj.a)}).is_unit() || !gcd(ea, pj.b).is_unit()) {
        coprime_a = false;
        why = "shares a factor with level " + std::to_string(j + 1);
      }
    }
    add("a" + si + " prime to earlier a_j, b_j", coprime_a, why);

    const BigInt qq = lv.q;
    const bool split_k = is_prime(lv.q) && lv.q % 3 == 1 && lv.pi.norm() == qq;
    std::vector<BigInt> roots;
    for (std::uint64_t x = 1; x < lv.q; ++x) {
      if (mod(BigInt(x) * x * x - a, qq) == 0) roots.push_back(x);
    }
    const bool split_full =
        split_k && boost::multiprecision::powm(a, (qq - 1) / 3, qq) == 1 && roots.size() == 3;
    add("q" + si + " splits completely in k(cbrt(a" + si + "))", split_full,
        "q = " + std::to_string(lv.q) + ", N(pi) = " + lv.pi.norm().str() + ", " +
            std::to_string(roots.size()) + " cube roots of a mod q");

    bool distinct = true;
    for (std::size_t j = 0; j < i; ++j) distinct = distinct && tower.levels[j].q != lv.q;
    add("q" + si + " distinct from earlier q_j", distinct, "q = " + std::to_string(lv.q));

    add("gamma" + si + " nonzero", !lv.gamma.is_zero(), lv.gamma.to_string());

    // Valuations of x = cbrt(a) - gamma at the six primes above q.
    std::vector<int> vals;
    bool lifted = split_full;
    if (split_full) {
      BigInt w0 = -1;
      for (std::uint64_t x = 0; x < lv.q && w0 < 0; ++x) {
        if (mod(BigInt(x) * x + x + 1, qq) == 0 && mod(lv.pi.a + lv.pi.b * x, qq) == 0) w0 = x;
      }
      const auto fw = [](const BigInt& x) { return x * x + x + 1; };
      const auto fc = [&](const BigInt& x) { return x * x * x - a; };
      const BigInt modulus = big_pow(lv.q, kPrec);
      const BigInt w = w0 < 0 ? BigInt(-1) : digit_lift(fw, w0, lv.q, kPrec);
      lifted = w >= 0;
      if (lifted) {
        for (const BigInt& wi : {w, mod(-1 - w, modulus)}) {
          const BigInt image = mod(lv.gamma.a + lv.gamma.b * wi, modulus);
          for (const BigInt& r : roots) {
            const BigInt rho = digit_lift(fc, r, lv.q, kPrec);
            lifted = lifted && rho >= 0;
            vals.push_back(truncated_valuation(rho - image, lv.q, static_cast<int>(kPrec)));
          }
        }
      }
    }
    std::string vs;
    for (int v : vals) vs += (vs.empty() ? "" : ",") + std::to_string(v);
    add("x" + si + " valuations at primes above q" + si, lifted && vals == std::vector<int>{1, 0, 0, 0, 0, 0},
        "(" + vs + ") mod q^4; beta_1 is the prime at the least cube root");

    bool s_ok = true;
    std::string s_why = "b_i prime to all earlier a_j, b_j; pi_i not above them";
    for (std::size_t j = 0; j < i; ++j) {
      const auto& pj = tower.levels[j];
      const EisensteinInt aj{BigInt(pj.a)};
      if (!gcd(lv.b, aj).is_unit() || !gcd(lv.b, pj.b).is_unit() || divides(lv.pi, aj) || divides(lv.pi, pj.b)) {
        s_ok = false;
        s_why = "conflict with level " + std::to_string(j + 1);
      }
    }
    add("x" + si + " valuation 0 on S" + si, s_ok, s_why);

    const EisensteinInt b = ea - lv.gamma * lv.gamma * lv.gamma;
    const CubicElt x{{EisensteinRat{-lv.gamma}, EisensteinRat{1}, EisensteinRat{}}};
    add("b" + si + " = N(x" + si + ")", b == lv.b && x == lv.x && cubic_norm(a, x) == EisensteinRat{b},
        "b = " + lv.b.to_string());

    const CubicElt s1 = cubic_sigma(x, 1);
    const CubicElt s2 = cubic_sigma(x, 2);
    const CubicElt lhs = cubic_mul(a, lv.omega, cubic_mul(a, s1, cubic_mul(a, s2, s2)));
    const bool closed = lv.omega == cubic_mul(a, cubic_mul(a, x, x), s1);
    add("omega" + si + " identity", lhs == CubicElt::scalar(EisensteinRat{b * b}) && closed,
        "omega * sigma(x) * sigma^2(x)^2 = b^2 and omega = x^2 sigma(x)");

    const std::uint64_t l = lv.noncube_residue_prime;
    const bool evidence = l != 0 && is_prime(l) && l % 3 == 1 &&
                          boost::multiprecision::powm(a, BigInt((l - 1) / 3), BigInt(l)) != 1;
    add("a" + si + " has no cube root mod a sampled prime", evidence,
        l ? "x^3 - a has no root mod " + std::to_string(l) : "no witness found");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formal Galois model

FormalGaloisVerdict verify_formal_galois(std::uint32_t m, std::uint64_t seed) {
  if (m < 1 || m > 3) throw Error(Errc::InvalidArgument, "formal verification supports m in 1..3");
  constexpr std::uint32_t p = 3;
  FormalGaloisVerdict v;
  v.m = m;
  const SymplecticExtraspecial model(p, m);
  const SymplecticExtraspecial h(p, 1);

  bool table_ok = true;
  ExtraspecialReport rep;
  if (m <= 2) {
    v.method = "table-quotient";
    const QuotientConstruction qc = extraspecial_by_quotient(p, m);
    table_ok = qc.isomorphism_verified && qc.kernel.order() == qc.product.order() / qc.group.order();
    rep = verify_extraspecial(qc.group, p);
  } else {
    v.method = "symplectic-model";
    rep = verify_extraspecial(model);
  }
  v.order = rep.order;
  v.exponent = rep.exponent;
  v.extraspecial = rep.verdict && rep.exponent == p && table_ok;

  // H^m as vectors of H-elements; projection onto E_m.
  const std::size_t hn = h.order();
  auto project = [&](const std::vector<Elem>& xs) {
    SymplecticExtraspecial::Point out;
    std::uint32_t a = 0;
    for (Elem x : xs) {
      const auto pt = h.decode(x);
      out.u.push_back(pt.u[0]);
      out.u.push_back(pt.u[1]);
      a += pt.a;
    }
    out.a = a % p;
    return model.encode(out);
  };
  auto mul_h = [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
    std::vector<Elem> r(m);
    for (std::uint32_t i = 0; i < m; ++i) r[i] = h.mul(x[i], y[i]);
    return r;
  };
  auto unpack = [&](std::uint64_t idx) {
    std::vector<Elem> r(m);
    for (auto& c : r) {
      c = static_cast<Elem>(idx % hn);
      idx /= hn;
    }
    return r;
  };
  std::uint64_t hm = 1;
  for (std::uint32_t i = 0; i < m; ++i) hm *= hn;

  bool hom = true;
  if (hm * hm <= 1000000) {
    v.projection_exhaustive = true;
    for (std::uint64_t x = 0; x < hm && hom; ++x) {
      const auto ux = unpack(x);
      const Elem px = project(ux);
      for (std::uint64_t y = 0; y < hm; ++y) {
        const auto uy = unpack(y);
        if (project(mul_h(ux, uy)) != model.mul(px, project(uy))) {
          hom = false;
          break;
        }
      }
    }
    v.projection_samples = hm * hm;
  } else {
    std::mt19937_64 rng(seed);
    v.projection_samples = 20000;
    for (std::size_t s = 0; s < v.projection_samples && hom; ++s) {
      const auto ux = unpack(rng() % hm);
      const auto uy = unpack(rng() % hm);
      hom = project(mul_h(ux, uy)) == model.mul(project(ux), project(uy));
    }
  }
  v.projection_homomorphism = hom;

  // Surjectivity: the images of the component generators generate E_m.
  std::vector<Elem> gens;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (Elem g : h.generators()) {
      std::vector<Elem> xs(m, h.identity());
      xs[i] = g;
      gens.push_back(project(xs));
    }
  }
  std::vector<char> seen(model.order(), 0);
  std::vector<Elem> frontier{model.identity()};
  seen[model.identity()] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Elem x = frontier.back();
    frontier.pop_back();
    for (Elem g : gens) {
      const Elem y = model.mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        frontier.push_back(y);
      }
    }
  }
  v.projection_surjective = reached == model.order();

  // z_i acts on the radical symbols by these exponents of zeta.
  // Symbols: cbrt(a_j), cbrt(b_j), cbrt(w_j) for j = 1..m.
  std::vector<std::vector<std::uint32_t>> z_exp(m, std::vector<std::uint32_t>(3 * m, 0));
  for (std::uint32_t i = 0; i < m; ++i) {
    z_exp[i][3 * i + 2] = 1;
    const std::string si = std::to_string(i + 1);
    v.z_actions.push_back("z" + si + ": cbrt(omega" + si + ") -> zeta cbrt(omega" + si +
                          "), fixes every cbrt(a_j), cbrt(b_j) and cbrt(omega_j) for j != " + si);
  }
  v.z_fix_a_b = true;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) {
      v.z_fix_a_b = v.z_fix_a_b && z_exp[i][3 * j] == 0 && z_exp[i][3 * j + 1] == 0;
    }
  }

  std::size_t kernel = 0;
  bool kernel_fixes = true, fixers_are_kernel = true;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < m; ++i) total *= p;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<Elem> xs(m);
    std::uint64_t rest = t;
    std::uint32_t radical_exp = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      const auto ai = static_cast<std::uint32_t>(rest % p);
      rest /= p;
      xs[i] = h.central(ai);
      // The product radical picks up the exponent on each cbrt(w_j).
      for (std::uint32_t j = 0; j < m; ++j) radical_exp += ai * z_exp[i][3 * j + 2];
    }
    const bool in_kernel = project(xs) == model.identity();
    const bool fixes = radical_exp % p == 0;
    if (in_kernel) ++kernel;
    if (in_kernel && !fixes) kernel_fixes = false;
    if (in_kernel != fixes) fixers_are_kernel = false;
  }
  v.kernel_order = kernel;
  v.kernel_fixes_radical = kernel_fixes;
  v.fixers_are_kernel = fixers_are_kernel;

  v.product_order = big_pow(p, 3 * m);
  v.quotient_order = v.product_order / kernel;
  v.degree_accounting = kernel == static_cast<std::size_t>(big_pow(p, m - 1)) &&
                        v.quotient_order == big_pow(p, 2 * m) * p && v.quotient_order == model.order() &&
                        v.quotient_order == v.order;

  v.verdict = v.extraspecial && v.order == model.order() && v.exponent == p && v.projection_homomorphism &&
              v.projection_surjective && v.kernel_fixes_radical && v.fixers_are_kernel && v.z_fix_a_b &&
              v.degree_accounting;
  return v;
}

// ---------------------------------------------------------------------------
// Embedding plan

SymbolAutomorphism compose(const SymbolAutomorphism& f, const SymbolAutomorphism& g, const SemidirectGroup& grp) {
  const auto& e = grp.complement();
  const PrimeField field(grp.q());
  SymbolAutomorphism r;
  r.c.resize(g.c.size());
  for (Elem t = 0; t < g.c.size(); ++t) r.c[t] = field.add(g.c[t], f.c[e.mul(g.s, t)]);
  r.s = e.mul(f.s, g.s);
  return r;
}

SymbolAutomorphism symbol_automorphism(const SemidirectGroup& grp, const SDElement& x) {
  const auto& e = grp.complement();
  SymbolAutomorphism r;
  r.c.assign(e.order(), 0);
  for (Elem t = 0; t < e.order(); ++t) {
    const auto it = x.w.find(e.mul(x.e, t));
    if (it != x.w.end()) r.c[t] = it->second;
  }
  r.s = x.e;
  return r;
}

EmbeddingPlan embedding_plan(std::uint32_t p, std::uint32_t q, std::uint32_t m, std::size_t samples,
                             std::uint64_t seed) {
  if (q < 2 || (q - 1) % p != 0) {
    throw Error(Errc::NoRootOfUnity, "p = " + std::to_string(p) + " does not divide q - 1 = " +
                                         std::to_string(q - 1));
  }
  const SemidirectGroup grp(p, q, m);
  const auto& e = grp.complement();
  const auto n = static_cast<Elem>(e.order());
  EmbeddingPlan plan;
  plan.p = p;
  plan.q = q;
  plan.m = m;
  plan.seed = seed;
  for (Elem s = 0; s < n; ++s) {
    plan.symbols.push_back("root" + std::to_string(q) + "(sigma[" + e.label(s) + "](x))");
  }

  auto lambda = [&](Elem s) { return symbol_automorphism(grp, SDElement{{{s, 1}}, e.identity()}); };
  auto translate = [&](Elem s) { return symbol_automorphism(grp, SDElement{{}, s}); };

  FqMatrix mat(n, n, q);
  plan.basis_changes_one_radical = true;
  for (Elem s = 0; s < n; ++s) {
    const SymbolAutomorphism l = lambda(s);
    for (Elem t = 0; t < n; ++t) {
      mat.at(t, s) = l.c[t];
      if ((t == s) != (l.c[t] != 0) || (t == s && l.c[t] != 1)) plan.basis_changes_one_radical = false;
    }
    if (l.s != e.identity()) plan.basis_changes_one_radical = false;
  }
  plan.lambda_rank = mat.rank();
  plan.lambda_injective = plan.lambda_rank == n;
  plan.image_order = big_pow(q, plan.lambda_rank);
  plan.lambda_zero_is_identity =
      symbol_automorphism(grp, SDElement{}) == SymbolAutomorphism{std::vector<Fq>(n, 0), e.identity()};

  // Conjugation by every element of E when E is small, by the generators otherwise.
  std::vector<Elem> conj_by;
  if (n <= 243) {
    for (Elem s = 0; s < n; ++s) conj_by.push_back(s);
  } else {
    conj_by = e.generators();
  }
  plan.conjugation_translates = true;
  for (Elem s : conj_by) {
    const SymbolAutomorphism ts = translate(s), tinv = translate(e.inverse(s));
    for (Elem t = 0; t < n && plan.conjugation_translates; ++t) {
      if (compose(compose(ts, lambda(t), grp), tinv, grp) != lambda(e.mul(s, t))) {
        plan.conjugation_translates = false;
      }
    }
  }

  std::mt19937_64 rng(seed);
  plan.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const SDElement x = grp.random(rng);
    const SDElement y = grp.random(rng);
    if (compose(symbol_automorphism(grp, x), symbol_automorphism(grp, y), grp) !=
        symbol_automorphism(grp, grp.mul(x, y))) {
      ++plan.composition_mismatches;
    }
  }
  return plan;
}

}  // namespace localdeg
