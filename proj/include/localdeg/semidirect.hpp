#pragma once

// F_q[E] x| E for E extraspecial of order p^(2m+1): elements (w, e) with w a
// sparse vector indexed by E and e in E.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "localdeg/bigint.hpp"
#include "localdeg/extraspecial.hpp"
#include "localdeg/fq.hpp"

namespace localdeg {

struct SDElement {
  std::map<Elem, Fq> w;  // zero coefficients omitted
  Elem e = 0;

  friend bool operator==(const SDElement&, const SDElement&) = default;
};

class SemidirectGroup {
 public:
  /// p odd prime (the complement), q prime; throws InvalidArgument otherwise.
  SemidirectGroup(std::uint32_t p, std::uint32_t q, std::uint32_t m);

  std::uint32_t p() const noexcept { return complement_.p(); }
  std::uint32_t q() const noexcept { return field_.q(); }
  std::uint32_t m() const noexcept { return complement_.m(); }
  const SymplecticExtraspecial& complement() const noexcept { return complement_; }

  SDElement identity() const { return {}; }
  /// (w1, e1)(w2, e2) = (w1 + e1.w2, e1 e2). Throws ParameterMismatch for
  /// elements that do not belong to this group.
  SDElement mul(const SDElement& a, const SDElement& b) const;
  SDElement inverse(const SDElement& a) const;
  SDElement power(const SDElement& a, std::uint64_t k) const;
  /// (e.w)_{e t} = w_t.
  std::map<Elem, Fq> act(Elem e, const std::map<Elem, Fq>& w) const;
  /// Order from (w, e)^k = (sum_j e^j.w, e^k) with k = ord(e): k if that sum
  /// vanishes, else k q.
  std::uint64_t order(const SDElement& a) const;
  void validate(const SDElement& a) const;

  /// Dense uniformly random algebra part and uniform complement part.
  SDElement random(std::mt19937_64& rng) const;

 private:
  SymplecticExtraspecial complement_;
  PrimeField field_;
};

std::string to_string(const SemidirectGroup& g, const SDElement& a);

struct ExponentCertificate {
  std::uint32_t p = 0, q = 0, m = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> proof_steps;
  bool complement_exponent_p = false;
  std::map<std::uint64_t, std::size_t> order_histogram;
  bool all_orders_divide_pq = false;
  /// a^ord(a) = 1 and a^d != 1 for each proper divisor d of ord(a).
  bool orders_minimal = false;
  /// Conjugates of sampled algebra elements stay in the algebra part.
  bool normality_on_samples = false;
  SDElement witness;
  std::uint64_t witness_order = 0;
};

ExponentCertificate exponent_certificate(std::uint32_t p, std::uint32_t q, std::uint32_t m,
                                         std::size_t samples, std::uint64_t seed);

struct MinimalNormalCertificate {
  std::uint32_t p = 0, q = 0, m = 0;
  BigInt subgroup_order;  // q^(p^m)
  FqSubspace embedding{0, 2};
  std::size_t rank = 0;
  std::size_t commutant_dim = 0;
  std::size_t hom_multiplicity = 0;
  /// From every standard basis vector of W_m and every basis vector of the
  /// embedded copy, the spun subspace is everything.
  bool spin_closure = false;
  bool invariant = false;
};

/// Throws NoRootOfUnity unless p divides q - 1.
MinimalNormalCertificate minimal_normal_certificate(std::uint32_t p, std::uint32_t q,
                                                    std::uint32_t m);

}  // namespace localdeg
