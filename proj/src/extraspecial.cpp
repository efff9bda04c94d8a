#include "localdeg/extraspecial.hpp"

#include <deque>
#include <limits>
#include <unordered_set>

#include "localdeg/error.hpp"
#include "localdeg/fq.hpp"

namespace localdeg {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_power_of(std::size_t n, std::size_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Symplectic model

SymplecticExtraspecial::SymplecticExtraspecial(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (p == 2 || !is_prime(p)) throw Error(Errc::InvalidArgument, "p must be an odd prime");
  if (m == 0) throw Error(Errc::InvalidArgument, "m must be positive");
  std::uint64_t order = 1;
  for (std::uint32_t k = 0; k < 2 * m + 1; ++k) {
    order *= p;
    if (order > std::numeric_limits<Elem>::max()) {
      throw Error(Errc::CapExceeded, "order p^(2m+1) does not fit an element index");
    }
  }
  order_ = order;
}

SymplecticExtraspecial::Point SymplecticExtraspecial::decode(Elem x) const {
  Point pt;
  pt.u.resize(2 * m_);
  for (auto& c : pt.u) {
    c = x % p_;
    x /= p_;
  }
  pt.a = x;
  return pt;
}

Elem SymplecticExtraspecial::encode(const Point& pt) const {
  std::uint64_t idx = pt.a % p_;
  for (std::size_t k = pt.u.size(); k-- > 0;) idx = idx * p_ + pt.u[k] % p_;
  return static_cast<Elem>(idx);
}

std::uint32_t SymplecticExtraspecial::beta(const std::vector<std::uint32_t>& u,
                                           const std::vector<std::uint32_t>& v) const {
  std::uint64_t s = 0;
  for (std::uint32_t i = 0; i < m_; ++i) s += std::uint64_t{u[2 * i]} * v[2 * i + 1];
  return static_cast<std::uint32_t>(s % p_);
}

Elem SymplecticExtraspecial::mul(Elem x, Elem y) const {
  auto a = decode(x);
  const auto b = decode(y);
  const std::uint32_t c = beta(a.u, b.u);
  for (std::size_t k = 0; k < a.u.size(); ++k) a.u[k] = (a.u[k] + b.u[k]) % p_;
  a.a = (a.a + b.a + c) % p_;
  return encode(a);
}

Elem SymplecticExtraspecial::inverse(Elem x) const {
  // (u, a)^-1 = (-u, beta(u, u) - a).
  auto a = decode(x);
  const std::uint32_t b = beta(a.u, a.u);
  for (auto& c : a.u) c = (p_ - c) % p_;
  a.a = (b + p_ - a.a) % p_;
  return encode(a);
}

Elem SymplecticExtraspecial::power(Elem x, std::uint64_t k) const {
  auto a = decode(x);
  const std::uint64_t b = beta(a.u, a.u);
  const std::uint64_t kk = k % p_;
  // C(k, 2) mod p, computed without overflow.
  const std::uint64_t c2 = (k % 2 == 0) ? ((k / 2) % p_) * ((k - 1) % p_) % p_
                                        : (k % p_) * (((k - 1) / 2) % p_) % p_;
  for (auto& c : a.u) c = static_cast<std::uint32_t>(c * kk % p_);
  a.a = static_cast<std::uint32_t>((a.a * kk + c2 * b) % p_);
  return encode(a);
}

Elem SymplecticExtraspecial::commutator(Elem x, Elem y) const {
  const auto a = decode(x);
  const auto b = decode(y);
  Point c;
  c.u.assign(2 * m_, 0);
  c.a = (beta(a.u, b.u) + p_ - beta(b.u, a.u)) % p_;
  return encode(c);
}

Elem SymplecticExtraspecial::central(std::uint32_t a) const {
  Point c;
  c.u.assign(2 * m_, 0);
  c.a = a % p_;
  return encode(c);
}

Elem SymplecticExtraspecial::x_gen(std::uint32_t i) const {
  Point c;
  c.u.assign(2 * m_, 0);
  c.u.at(2 * i) = 1;
  return encode(c);
}

Elem SymplecticExtraspecial::y_gen(std::uint32_t i) const {
  Point c;
  c.u.assign(2 * m_, 0);
  c.u.at(2 * i + 1) = 1;
  return encode(c);
}

std::vector<Elem> SymplecticExtraspecial::generators() const {
  std::vector<Elem> g;
  for (std::uint32_t i = 0; i < m_; ++i) {
    g.push_back(x_gen(i));
    g.push_back(y_gen(i));
  }
  return g;
}

std::string SymplecticExtraspecial::label(Elem x) const {
  const auto pt = decode(x);
  std::string s = "(";
  for (std::size_t k = 0; k < pt.u.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(pt.u[k]);
  }
  return s + ";" + std::to_string(pt.a) + ")";
}

// ---------------------------------------------------------------------------
// Table constructions

HeisenbergPair heisenberg(std::uint32_t p, std::size_t cap) {
  SymplecticExtraspecial model(p, 1);
  const std::size_t n = std::size_t{p} * p * p;
  if (n > cap) throw Error(Errc::CapExceeded, "p^3 exceeds the table cap");

  // Matrix product of [[1,x,z],[0,1,y],[0,0,1]] and [[1,x',z'],[0,1,y'],[0,0,1]].
  auto idx = [p](std::size_t x, std::size_t y, std::size_t z) {
    return static_cast<Elem>(x % p + p * (y % p) + std::size_t{p} * p * (z % p));
  };
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t x = a % p, y = (a / p) % p, z = a / (std::size_t{p} * p);
    labels[a] = "[" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + "]";
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t x2 = b % p, y2 = (b / p) % p, z2 = b / (std::size_t{p} * p);
      mul[a * n + b] = idx(x + x2, y + y2, z + z2 + x * y2);
    }
  }
  HeisenbergPair out{TableGroup::trusted(n, std::move(mul), std::move(labels)), model, {}};
  out.isomorphism.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    SymplecticExtraspecial::Point pt;
    pt.u = {static_cast<std::uint32_t>(a % p), static_cast<std::uint32_t>((a / p) % p)};
    pt.a = static_cast<std::uint32_t>(a / (std::size_t{p} * p));
    out.isomorphism[a] = model.encode(pt);
  }
  if (!is_isomorphism(out.table, model, out.isomorphism)) {
    throw std::logic_error("heisenberg: matrix model and symplectic model disagree");
  }
  return out;
}

QuotientConstruction extraspecial_by_quotient(std::uint32_t p, std::uint32_t m, std::size_t cap) {
  SymplecticExtraspecial model(p, m);
  if (ipow(p, 3 * m) > cap) throw Error(Errc::CapExceeded, "p^(3m) exceeds the table cap");
  const auto h = heisenberg(p, cap);
  const std::vector<TableGroup> factors(m, h.table);
  QuotientConstruction out{direct_product(factors), {}, TableGroup::trusted(1, {0}), model, {}, false};

  const std::size_t p2 = std::size_t{p} * p;
  // Central element z^c of H has index c p^2.
  std::vector<Elem> comps(m);
  const std::size_t total = ipow(p, m);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t, sum = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      const std::size_t c = rest % p;
      rest /= p;
      sum += c;
      comps[i] = static_cast<Elem>(c * p2);
    }
    if (sum % p == 0) out.kernel.members.push_back(product_element(factors, comps));
  }
  std::sort(out.kernel.members.begin(), out.kernel.members.end());

  const Quotient q = quotient_with_map(out.product, out.kernel);
  out.group = q.group;
  out.isomorphism.resize(q.group.order());
  for (std::size_t c = 0; c < q.group.order(); ++c) {
    const auto parts = product_components(factors, q.representatives[c]);
    SymplecticExtraspecial::Point pt;
    std::size_t a = 0;
    for (Elem e : parts) {
      pt.u.push_back(e % p);
      pt.u.push_back((e / p) % p);
      a += e / p2;
    }
    pt.a = static_cast<std::uint32_t>(a % p);
    out.isomorphism[c] = model.encode(pt);
  }
  out.isomorphism_verified = is_isomorphism(out.group, model, out.isomorphism);
  return out;
}

// ---------------------------------------------------------------------------
// Verification

ExtraspecialReport verify_extraspecial(const TableGroup& g, std::uint32_t p) {
  ExtraspecialReport r;
  r.p = p;
  r.order = g.order();
  r.exponent = exponent(g);
  const Subgroup z = center(g);
  const Subgroup d = derived_subgroup(g);
  r.center_order = z.order();
  r.derived_order = d.order();
  r.center_equals_derived = z == d;

  Subgroup phi = whole_group(g);
  for (const auto& h : index_p_subgroups(g, p)) phi = intersect(phi, h);
  r.frattini_order = phi.order();

  const TableGroup q = quotient(g, z);
  r.quotient_elementary_abelian = is_abelian(q) && p % exponent(q) == 0;
  r.verdict = g.order() > 1 && is_power_of(g.order(), p) && r.center_order == p &&
              r.derived_order == p && r.center_equals_derived && r.quotient_elementary_abelian;
  return r;
}

ExtraspecialReport verify_extraspecial(const SymplecticExtraspecial& g) {
  const std::uint32_t p = g.p();
  const std::size_t n = 2 * g.m();
  ExtraspecialReport r;
  r.p = p;
  r.order = g.order();

  // Gram matrix of the alternating form (u, v) -> beta(u, v) - beta(v, u).
  FqMatrix gram(n, n, p);
  std::vector<std::uint32_t> ei(n), ej(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(ei.begin(), ei.end(), 0);
    ei[i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(ej.begin(), ej.end(), 0);
      ej[j] = 1;
      gram.at(i, j) = (g.beta(ei, ej) + p - g.beta(ej, ei)) % p;
    }
  }
  const std::size_t rank = gram.rank();
  // (u, a) is central iff u lies in the radical of the form.
  r.center_order = ipow(p, n - rank) * p;
  // Commutators are (0, form value); the form is nonzero iff rank > 0.
  r.derived_order = rank > 0 ? p : 1;
  r.center_equals_derived = r.center_order == r.derived_order;

  // (u, a)^p = (0, C(p, 2) beta(u, u)) and p divides C(p, 2) for odd p.
  r.exponent = p;
  if (g.order() <= 65536) {
    for (Elem x = 1; x < g.order(); ++x) {
      if (g.power(x, p) != g.identity()) r.exponent = 0;
    }
  }
  // Exponent p makes G^p trivial, so the Frattini subgroup is G'.
  r.frattini_order = r.exponent == p ? r.derived_order : 0;
  // Modulo the center only u survives, and u adds as a vector in F_p^(2m).
  r.quotient_elementary_abelian = rank == n;
  r.verdict = r.center_order == p && r.derived_order == p && r.quotient_elementary_abelian &&
              r.exponent == p;
  return r;
}

// ---------------------------------------------------------------------------
// Subgroup searches

AbelianSearch max_abelian_subgroup_order(const TableGroup& g, std::uint32_t p, std::uint32_t m) {
  if (is_abelian(g)) throw Error(Errc::InvalidArgument, "input group is abelian");
  AbelianSearch res;
  struct Node {
    Bitset members;
    std::vector<Elem> gens;
  };
  std::unordered_set<Bitset, BitsetHash> seen;
  std::deque<Node> queue;
  Bitset triv(g.order());
  triv.set(g.identity());
  seen.insert(triv);
  queue.push_back({triv, {}});
  res.max_order = 1;
  res.witness = trivial_subgroup(g);

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    ++res.abelian_subgroups;
    const std::size_t size = node.members.count();
    if (size > res.max_order) {
      res.max_order = size;
      res.witness = Subgroup::from_mask(node.members);
    }
    for (Elem x = 0; x < g.order(); ++x) {
      if (node.members.test(x)) continue;
      bool commutes = true;
      for (Elem s : node.gens) {
        if (g.mul(x, s) != g.mul(s, x)) {
          commutes = false;
          break;
        }
      }
      if (!commutes) continue;
      std::vector<Elem> gens = node.gens;
      gens.push_back(x);
      Bitset next = generate(g, gens).mask(g.order());
      if (seen.insert(next).second) queue.push_back({std::move(next), std::move(gens)});
    }
  }
  const std::size_t bound = ipow(p, m + 1);
  res.bound_holds = res.max_order <= bound;
  res.bound_attained = res.max_order == bound;
  return res;
}

BoundedIndexIntersection bounded_index_intersection(const TableGroup& g, std::uint32_t p,
                                                    std::uint32_t m) {
  BoundedIndexIntersection out;
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Subgroup> level{whole_group(g)};
  seen.insert(level.front().mask(g.order()));
  out.intersection = level.front();
  out.subgroups_used = 1;
  // Index p^k for k = 1 .. m-1: every such subgroup of a p-group sits at the
  // bottom of a chain of index-p steps.
  for (std::uint32_t k = 1; k < m; ++k) {
    std::vector<Subgroup> next;
    for (const auto& h : level) {
      const EmbeddedGroup local = subgroup_as_group(g, h);
      for (const auto& sub : index_p_subgroups(local.group, p)) {
        Subgroup lifted;
        for (Elem e : sub.members) lifted.members.push_back(local.embedding[e]);
        if (seen.insert(lifted.mask(g.order())).second) next.push_back(std::move(lifted));
      }
    }
    for (const auto& h : next) out.intersection = intersect(out.intersection, h);
    out.subgroups_used += next.size();
    level = std::move(next);
  }
  const Subgroup z = center(g);
  out.contains_center = std::includes(out.intersection.members.begin(),
                                      out.intersection.members.end(), z.members.begin(),
                                      z.members.end());
  return out;
}

}  // namespace localdeg
