#pragma once

// Closed-form degree and exponent bounds, evaluated exactly or kept symbolic.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localdeg/bigint.hpp"
#include "localdeg/tower.hpp"

namespace localdeg {

struct BoundValue {
  TowerExpr raw;         // as produced by the formula
  TowerExpr simplified;  // simplify(raw)
  std::optional<BigInt> value;  // when within the bit cap
};

BoundValue make_bound(TowerExpr raw, std::uint64_t cap_bits = kDefaultCapBits);

struct DerivedLengthBound {
  std::uint64_t b = 0, n = 0;
  /// A(0) = b^3, A(i+1) = b^(A(0) * ... * A(i) + 2).
  std::vector<BoundValue> layers;
  /// A(0) * ... * A(n).
  BoundValue total;
  std::vector<std::string> trace;
};

/// Throws InvalidArgument for b < 2.
DerivedLengthBound derived_length_bound(std::uint64_t b, std::uint64_t n,
                                        std::uint64_t cap_bits = kDefaultCapBits);

/// b^(b^3 + 5). Throws InvalidArgument for b = 0.
BoundValue abelian_bound(std::uint64_t b, std::uint64_t cap_bits = kDefaultCapBits);

struct LocalBoundReport {
  std::uint64_t p = 0, q = 0;
  BoundValue away;             // l != p, q: q^6
  BoundValue at_q_exact;       // l = q: p q * p^2 * q^(p^3 q + 2) = q^(p^3 q + 3) * p^3
  BoundValue at_q;             // q^(q^4 + 6)
  BoundValue at_p_metabelian;  // p^(p^2 + 4)
  BoundValue at_p;             // q^(q^2 + 6)
  BoundValue overall;          // q^(q^4 + 6)
  /// q^(p^3 q + 3) * p^3 < q^(q^4 + 6).
  bool at_q_inequality = false;
  std::string at_q_method;  // "exact" or "exponent"
  bool at_p_inequality = false;  // p^(p^2 + 4) <= q^(q^2 + 4)
  bool overall_dominates = false;
  std::vector<std::string> trace;
};

/// Requires odd primes p < q with p | q - 1 (InvalidArgument otherwise).
LocalBoundReport pq_field_bounds(std::uint64_t p, std::uint64_t q,
                                 std::uint64_t cap_bits = kDefaultCapBits);

/// B!. Throws InvalidArgument for B = 0.
BigInt chebotarev_exponent_bound(std::uint64_t b);

/// (p^r)^(degree + e) with e = 2 if the field has p-th roots of unity,
/// else 1; r = 0 gives 1.
BigInt cft_layer_size(std::uint64_t degree, std::uint64_t p, std::uint64_t r, bool has_pth_roots);

/// |Q_p^* / (Q_p^*)^2|, from the unit group modulo p (odd p) or modulo 8.
std::uint64_t square_class_count(std::uint64_t p);

struct LocalExtensionCount {
  std::uint64_t p = 0, d = 0;
  std::uint64_t square_classes = 0;
  std::uint64_t quadratic = 0;
  /// Order of the multiquadratic compositum, equal to the square-class count.
  std::uint64_t quadratic_compositum_degree = 0;
  std::uint64_t cube_class_rank = 0;
  std::uint64_t cyclic_cubic = 0;
  std::uint64_t noncyclic_cubic = 0;  // counted as subfields: 3 per S3 closure
  std::uint64_t cubic = 0;
  /// 2^quadratic * 3^cubic (d >= 2), a crude bound on the compositum of all
  /// extensions of degree <= d.
  BigInt compositum_bound;
  std::vector<std::string> trace;
};

/// d in {1, 2, 3}; throws UnsupportedDegree otherwise.
LocalExtensionCount local_compositum_degree_bound(std::uint64_t p, std::uint64_t d);

}  // namespace localdeg
