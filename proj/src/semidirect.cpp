#include "localdeg/semidirect.hpp"

#include "localdeg/error.hpp"
#include "localdeg/repr.hpp"

namespace localdeg {

SemidirectGroup::SemidirectGroup(std::uint32_t p, std::uint32_t q, std::uint32_t m)
    : complement_(p, m), field_(q) {}

void SemidirectGroup::validate(const SDElement& a) const {
  if (a.e >= complement_.order()) throw Error(Errc::ParameterMismatch, "complement index out of range");
  for (const auto& [k, v] : a.w) {
    if (k >= complement_.order() || v == 0 || v >= field_.q()) {
      throw Error(Errc::ParameterMismatch, "algebra coordinate out of range");
    }
  }
}

std::map<Elem, Fq> SemidirectGroup::act(Elem e, const std::map<Elem, Fq>& w) const {
  std::map<Elem, Fq> out;
  for (const auto& [t, v] : w) out.emplace(complement_.mul(e, t), v);
  return out;
}

namespace {

void add_into(std::map<Elem, Fq>& acc, const std::map<Elem, Fq>& w, const PrimeField& f) {
  for (const auto& [k, v] : w) {
    auto [it, inserted] = acc.emplace(k, v);
    if (!inserted) {
      it->second = f.add(it->second, v);
      if (it->second == 0) acc.erase(it);
    }
  }
}

}  // namespace

SDElement SemidirectGroup::mul(const SDElement& a, const SDElement& b) const {
  validate(a);
  validate(b);
  SDElement r;
  r.w = a.w;
  add_into(r.w, act(a.e, b.w), field_);
  r.e = complement_.mul(a.e, b.e);
  return r;
}

SDElement SemidirectGroup::inverse(const SDElement& a) const {
  // (w, e)^-1 = (-(e^-1 . w), e^-1).
  validate(a);
  SDElement r;
  r.e = complement_.inverse(a.e);
  for (const auto& [k, v] : act(r.e, a.w)) r.w.emplace(k, field_.neg(v));
  return r;
}

SDElement SemidirectGroup::power(const SDElement& a, std::uint64_t k) const {
  SDElement result = identity();
  SDElement base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

std::uint64_t SemidirectGroup::order(const SDElement& a) const {
  validate(a);
  const std::uint64_t k = a.e == complement_.identity() ? 1 : complement_.p();
  std::map<Elem, Fq> trace;
  Elem ej = complement_.identity();
  for (std::uint64_t j = 0; j < k; ++j) {
    add_into(trace, act(ej, a.w), field_);
    ej = complement_.mul(ej, a.e);
  }
  return trace.empty() ? k : k * field_.q();
}

SDElement SemidirectGroup::random(std::mt19937_64& rng) const {
  SDElement r;
  for (Elem t = 0; t < complement_.order(); ++t) {
    const auto v = static_cast<Fq>(rng() % field_.q());
    if (v) r.w.emplace(t, v);
  }
  r.e = static_cast<Elem>(rng() % complement_.order());
  return r;
}

std::string to_string(const SemidirectGroup& g, const SDElement& a) {
  std::string s = "(";
  bool first = true;
  for (const auto& [k, v] : a.w) {
    if (!first) s += " + ";
    first = false;
    s += std::to_string(v) + "*" + g.complement().label(k);
  }
  if (first) s += "0";
  return s + ", " + g.complement().label(a.e) + ")";
}

ExponentCertificate exponent_certificate(std::uint32_t p, std::uint32_t q, std::uint32_t m,
                                         std::size_t samples, std::uint64_t seed) {
  if (p == q) throw Error(Errc::InvalidArgument, "p and q must be distinct");
  if (q == 2) throw Error(Errc::InvalidArgument, "q must be odd");
  const SemidirectGroup g(p, q, m);
  ExponentCertificate c;
  c.p = p;
  c.q = q;
  c.m = m;
  c.samples = samples;
  c.seed = seed;

  const auto er = verify_extraspecial(g.complement());
  c.complement_exponent_p = er.exponent == p;
  c.proof_steps = {
      "the algebra part F_q[E] is an elementary abelian q-group",
      "the complement E has exponent " + std::to_string(p) + " (" +
          (c.complement_exponent_p ? "verified" : "NOT verified") + ")",
      "(w, e)^p = (w + e.w + ... + e^(p-1).w, 1) lies in the algebra part, so its order divides q",
      "gcd(p, q) = 1, hence every element order divides pq",
  };

  const std::uint64_t pq = std::uint64_t{p} * q;
  std::mt19937_64 rng(seed);
  c.all_orders_divide_pq = true;
  c.orders_minimal = true;
  c.normality_on_samples = true;
  for (std::size_t s = 0; s < samples; ++s) {
    const SDElement a = g.random(rng);
    const std::uint64_t ord = g.order(a);
    ++c.order_histogram[ord];
    if (pq % ord != 0) c.all_orders_divide_pq = false;
    if (!(g.power(a, ord) == g.identity())) c.orders_minimal = false;
    for (std::uint64_t d : {std::uint64_t{1}, std::uint64_t{p}, std::uint64_t{q}}) {
      if (d < ord && ord % d == 0 && g.power(a, d) == g.identity()) c.orders_minimal = false;
    }
    // Conjugate the algebra part of the next sample by this one.
    SDElement n = g.random(rng);
    n.e = g.complement().identity();
    const SDElement conj = g.mul(g.mul(a, n), g.inverse(a));
    if (conj.e != g.complement().identity()) c.normality_on_samples = false;
  }

  c.witness.e = g.complement().x_gen(0);
  c.witness.w.emplace(g.complement().identity(), 1);
  c.witness_order = g.order(c.witness);
  if (!(g.power(c.witness, c.witness_order) == g.identity())) c.orders_minimal = false;
  return c;
}

MinimalNormalCertificate minimal_normal_certificate(std::uint32_t p, std::uint32_t q,
                                                    std::uint32_t m) {
  MinimalNormalCertificate c;
  c.p = p;
  c.q = q;
  c.m = m;
  const TensorModule w = tensor_power_rep(p, q, m);
  const MatrixRep reg = regular_module(w.group, q);
  c.embedding = equivariant_embedding(w.rep, reg);
  c.rank = c.embedding.dim();
  c.invariant = is_invariant(reg, c.embedding);
  c.commutant_dim = commutant_dimension(w.rep);
  c.hom_multiplicity = hom_space_dimension(reg, w.rep);

  c.spin_closure = true;
  std::vector<Fq> e(w.rep.dim, 0);
  for (std::size_t i = 0; i < w.rep.dim; ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = 1;
    if (spin_closure_dimension(w.rep, e) != w.rep.dim) c.spin_closure = false;
  }
  for (const auto& b : c.embedding.basis()) {
    if (spin_closure_dimension(reg, b) != w.rep.dim) c.spin_closure = false;
  }
  c.subgroup_order = big_pow(q, c.rank);
  return c;
}

}  // namespace localdeg
