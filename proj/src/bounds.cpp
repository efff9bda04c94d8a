#include "localdeg/bounds.hpp"

#include <numeric>
#include <set>

#include "localdeg/error.hpp"
#include "localdeg/fq.hpp"

namespace localdeg {

namespace {

TowerExpr lit(std::uint64_t v) { return TowerExpr::literal(BigInt(v)); }

TowerExpr pw(TowerExpr b, TowerExpr e) { return TowerExpr::power(std::move(b), std::move(e)); }

std::string show(const BoundValue& v) {
  std::string s = v.simplified.to_string();
  if (v.value && v.simplified.kind() != TowerExpr::Kind::Literal) {
    const std::string digits = v.value->str();
    s += digits.size() <= 40 ? " = " + digits : " (" + std::to_string(digits.size()) + " digits)";
  }
  return s;
}

}  // namespace

BoundValue make_bound(TowerExpr raw, std::uint64_t cap_bits) {
  TowerExpr s = simplify(raw);
  auto v = evaluate_within(s, cap_bits);
  return {std::move(raw), std::move(s), std::move(v)};
}

DerivedLengthBound derived_length_bound(std::uint64_t b, std::uint64_t n, std::uint64_t cap_bits) {
  if (b < 2) throw Error(Errc::InvalidArgument, "b must be at least 2");
  DerivedLengthBound out;
  out.b = b;
  out.n = n;
  out.trace.push_back("A(0) = b^3 with b = " + std::to_string(b));
  out.trace.push_back("A(i+1) = b^(A(0)*...*A(i) + 2), the product running over j = 0..i");

  std::vector<TowerExpr> raw_layers{pw(lit(b), lit(3))};
  out.layers.push_back(make_bound(raw_layers.back(), cap_bits));
  out.trace.push_back("A(0) = " + show(out.layers.back()));
  TowerExpr running = out.layers.back().simplified;
  for (std::uint64_t i = 0; i < n; ++i) {
    raw_layers.push_back(pw(lit(b), TowerExpr::sum({running, lit(2)})));
    out.layers.push_back(make_bound(raw_layers.back(), cap_bits));
    out.trace.push_back("A(" + std::to_string(i + 1) + ") = " + raw_layers.back().to_string() +
                        " = " + show(out.layers.back()));
    running = simplify(TowerExpr::product({running, out.layers.back().simplified}));
  }
  out.total = make_bound(raw_layers.size() == 1 ? raw_layers.front() : TowerExpr::product(raw_layers),
                         cap_bits);
  out.trace.push_back("product of A(0..n) = " + show(out.total));
  return out;
}

BoundValue abelian_bound(std::uint64_t b, std::uint64_t cap_bits) {
  if (b == 0) throw Error(Errc::InvalidArgument, "b must be positive");
  return make_bound(pw(lit(b), TowerExpr::sum({pw(lit(b), lit(3)), lit(5)})), cap_bits);
}

LocalBoundReport pq_field_bounds(std::uint64_t p, std::uint64_t q, std::uint64_t cap_bits) {
  if (!is_prime(p) || !is_prime(q) || p == 2 || p >= q || (q - 1) % p != 0) {
    throw Error(Errc::InvalidArgument, "need odd primes p < q with p | q - 1");
  }
  if (q > 100000) throw Error(Errc::InvalidArgument, "q too large for exact exponent arithmetic");
  LocalBoundReport r;
  r.p = p;
  r.q = q;
  const std::uint64_t p3 = p * p * p;

  r.away = make_bound(pw(lit(q), lit(6)), cap_bits);
  r.trace.push_back("l != p, q: tame metabelian compositum of exponent dividing pq, degree <= " +
                    show(r.away));

  r.at_q_exact = make_bound(
      TowerExpr::product({lit(p * q), pw(lit(p), lit(2)),
                          pw(lit(q), TowerExpr::sum({TowerExpr::product({pw(lit(p), lit(3)), lit(q)}),
                                                     lit(2)}))}),
      cap_bits);
  r.at_q = make_bound(pw(lit(q), TowerExpr::sum({pw(lit(q), lit(4)), lit(6)})), cap_bits);
  r.trace.push_back("l = q: unramified <= pq, tame <= p^2, wild <= q^(p^3 q + 2)");
  r.trace.push_back("l = q: product " + r.at_q_exact.raw.to_string() + " = " + show(r.at_q_exact));

  const BigInt a_exp = BigInt(p3) * q + 3;
  const BigInt b_exp = big_pow(q, 4) + 6;
  if (auto c = compare(r.at_q_exact.simplified, r.at_q.simplified, cap_bits)) {
    r.at_q_inequality = *c < 0;
    r.at_q_method = "exact";
  } else {
    // q^A p^3 < q^B  <=>  p^3 < q^(B - A), and p < q gives p^3 < q^3.
    const BigInt gap = b_exp - a_exp;
    r.at_q_method = "exponent";
    r.at_q_inequality =
        gap >= 3 || (gap > 0 && BigInt(p3) < big_pow(q, static_cast<std::uint64_t>(gap)));
  }
  r.trace.push_back(std::string("l = q: ") + show(r.at_q_exact) + " < " + show(r.at_q) + " " +
                    (r.at_q_inequality ? "holds" : "FAILS") + " (" + r.at_q_method + ")");

  r.at_p_metabelian = make_bound(pw(lit(p), TowerExpr::sum({pw(lit(p), lit(2)), lit(4)})), cap_bits);
  const BoundValue q_side = make_bound(pw(lit(q), TowerExpr::sum({pw(lit(q), lit(2)), lit(4)})), cap_bits);
  if (auto c = compare(r.at_p_metabelian.simplified, q_side.simplified, cap_bits)) {
    r.at_p_inequality = *c <= 0;
  } else {
    r.at_p_inequality = p < q;  // both base and exponent grow
  }
  r.at_p = make_bound(pw(lit(q), TowerExpr::sum({pw(lit(q), lit(2)), lit(6)})), cap_bits);
  r.trace.push_back("l = p: metabelian p-part <= " + show(r.at_p_metabelian) + " <= " +
                    show(q_side) + (r.at_p_inequality ? "" : " FAILS"));
  r.trace.push_back("l = p: tame q-part adds a factor q^2, total <= " + show(r.at_p));

  r.overall = make_bound(pw(lit(q), TowerExpr::sum({pw(lit(q), lit(4)), lit(6)})), cap_bits);
  const auto c1 = compare(r.away.simplified, r.overall.simplified, cap_bits);
  const auto c2 = compare(r.at_p.simplified, r.overall.simplified, cap_bits);
  r.overall_dominates = c1 && *c1 <= 0 && c2 && *c2 <= 0 && r.at_q_inequality;
  r.trace.push_back("overall: every local degree <= " + show(r.overall));
  return r;
}

BigInt chebotarev_exponent_bound(std::uint64_t b) {
  if (b == 0) throw Error(Errc::InvalidArgument, "B must be positive");
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= b; ++i) f *= i;
  return f;
}

BigInt cft_layer_size(std::uint64_t degree, std::uint64_t p, std::uint64_t r, bool has_pth_roots) {
  if (degree == 0) throw Error(Errc::InvalidArgument, "degree must be positive");
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "p must be prime");
  return big_pow(p, r * (degree + (has_pth_roots ? 2 : 1)));
}

namespace {

// |U / U^k| for U the unit group modulo `mod`.
std::uint64_t unit_power_classes(std::uint64_t mod, std::uint64_t k) {
  std::set<std::uint64_t> units, powers;
  for (std::uint64_t u = 1; u < mod; ++u) {
    if (std::gcd(u, mod) != 1) continue;
    units.insert(u);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < k; ++i) v = v * u % mod;
    powers.insert(v);
  }
  return units.size() / powers.size();
}

std::uint64_t log_base(std::uint64_t n, std::uint64_t b) {
  std::uint64_t k = 0;
  while (n > 1) {
    n /= b;
    ++k;
  }
  return k;
}

}  // namespace

std::uint64_t square_class_count(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "p must be prime");
  // A unit is a square iff it is one modulo p (odd p) or modulo 8 (p = 2).
  const std::uint64_t mod = p == 2 ? 8 : p;
  return 2 * unit_power_classes(mod, 2);
}

LocalExtensionCount local_compositum_degree_bound(std::uint64_t p, std::uint64_t d) {
  if (d == 0 || d > 3) throw Error(Errc::UnsupportedDegree, "only degrees 1, 2, 3 are classified");
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "p must be prime");
  LocalExtensionCount c;
  c.p = p;
  c.d = d;
  c.square_classes = square_class_count(p);
  c.quadratic = c.square_classes - 1;
  c.quadratic_compositum_degree = c.square_classes;
  c.trace.push_back("square classes of Q_p^*: " + std::to_string(c.square_classes) + ", so " +
                    std::to_string(c.quadratic) + " quadratic extensions");

  // Cube classes: valuation, units modulo p (p != 3) or modulo 9 (p = 3).
  const std::uint64_t unit_cubes = unit_power_classes(p == 3 ? 9 : p, 3);
  c.cube_class_rank = 1 + log_base(unit_cubes, 3);
  const std::uint64_t r = c.cube_class_rank;
  std::uint64_t three_r = 1;
  for (std::uint64_t i = 0; i < r; ++i) three_r *= 3;
  c.cyclic_cubic = (three_r - 1) / 2;

  // Non-Galois cubics: for each quadratic K, the S3 closures with resolvent K
  // correspond to hyperplanes of the (-1)-eigenspace of K^*/K^*3, whose rank
  // is rank(K^*/K^*3) - r.
  std::uint64_t s3_closures = 0;
  for (std::uint64_t k = 0; k < c.quadratic; ++k) {
    const bool unramified = k == 0;
    const std::uint64_t residue = unramified ? p * p : p;
    std::uint64_t rank_k = 1 + ((residue - 1) % 3 == 0 ? 1 : 0);
    if (p == 3) rank_k += 2 + (k == 1 ? 1 : 0);  // k = 1 stands for Q_3(sqrt(-3))
    std::uint64_t e = 1;
    for (std::uint64_t i = r; i < rank_k; ++i) e *= 3;
    s3_closures += (e - 1) / 2;
  }
  c.noncyclic_cubic = 3 * s3_closures;
  c.cubic = c.cyclic_cubic + c.noncyclic_cubic;
  c.trace.push_back("cube classes of Q_p^*: rank " + std::to_string(r) + ", " +
                    std::to_string(c.cyclic_cubic) + " cyclic cubic and " +
                    std::to_string(c.noncyclic_cubic) + " non-Galois cubic extensions");

  c.compositum_bound = 1;
  if (d >= 2) c.compositum_bound *= big_pow(2, c.quadratic);
  if (d >= 3) c.compositum_bound *= big_pow(3, c.cubic);
  c.trace.push_back("compositum of all extensions of degree <= " + std::to_string(d) +
                    " has degree <= " + c.compositum_bound.str());
  return c;
}

}  // namespace localdeg
