#include "localdeg/group.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "localdeg/error.hpp"

namespace localdeg {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// Closure of `seed` under right multiplication by `gens`. `seed` must already
// contain the identity.
Bitset close_under(const TableGroup& g, Bitset seed, std::span<const Elem> gens) {
  std::vector<Elem> queue = seed.elements();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem a = queue[head];
    for (Elem s : gens) {
      const Elem b = g.mul(a, s);
      if (!seed.test(b)) {
        seed.set(b);
        queue.push_back(b);
      }
    }
  }
  return seed;
}

std::vector<std::uint32_t> prime_factors(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

bool is_power_of(std::size_t n, std::size_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// TableGroup

TableGroup TableGroup::from_table(std::size_t order, std::vector<Elem> mul, std::size_t cap) {
  if (order == 0) throw Error(Errc::InvalidArgument, "group order must be positive");
  if (order > cap) {
    throw Error(Errc::CapExceeded,
                "order " + std::to_string(order) + " exceeds table cap " + std::to_string(cap));
  }
  if (mul.size() != order * order) {
    throw Error(Errc::InvalidArgument, "table has " + std::to_string(mul.size()) +
                                           " entries, expected " + std::to_string(order * order));
  }
  for (Elem v : mul) {
    if (v >= order) throw Error(Errc::InvalidArgument, "entry " + std::to_string(v) + " out of range");
  }

  std::vector<char> seen(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order; ++j) {
      auto& s = seen[mul[i * order + j]];
      if (s) throw Error(Errc::NotLatinSquare, "row " + std::to_string(i));
      s = 1;
    }
  }
  for (std::size_t j = 0; j < order; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < order; ++i) {
      auto& s = seen[mul[i * order + j]];
      if (s) throw Error(Errc::NotLatinSquare, "column " + std::to_string(j));
      s = 1;
    }
  }

  std::optional<Elem> identity;
  for (std::size_t e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a) {
      ok = mul[e * order + a] == a && mul[a * order + e] == a;
    }
    if (ok) identity = static_cast<Elem>(e);
  }
  if (!identity) throw Error(Errc::NoIdentity, "no two-sided identity");

  for (std::size_t a = 0; a < order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order && !found; ++b) {
      found = mul[a * order + b] == *identity && mul[b * order + a] == *identity;
    }
    if (!found) throw Error(Errc::NoInverse, "element " + std::to_string(a));
  }

  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      const std::size_t ij = mul[i * order + j];
      for (std::size_t k = 0; k < order; ++k) {
        if (mul[ij * order + k] != mul[i * order + mul[j * order + k]]) {
          throw Error(Errc::NonAssociative, triple(i, j, k));
        }
      }
    }
  }

  return trusted(order, std::move(mul));
}

TableGroup TableGroup::trusted(std::size_t order, std::vector<Elem> mul,
                               std::vector<std::string> labels) {
  TableGroup g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  g.compute_identity_and_inverses();
  g.set_labels(std::move(labels));
  return g;
}

void TableGroup::compute_identity_and_inverses() {
  // In a group the identity is the unique idempotent.
  identity_ = 0;
  for (std::size_t e = 0; e < order_; ++e) {
    if (mul(static_cast<Elem>(e), static_cast<Elem>(e)) == e) {
      identity_ = static_cast<Elem>(e);
      break;
    }
  }
  inv_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    const Elem* row = &mul_[a * order_];
    for (std::size_t b = 0; b < order_; ++b) {
      if (row[b] == identity_) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
}

std::string TableGroup::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

void TableGroup::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order_) {
    throw Error(Errc::InvalidArgument, "label count does not match group order");
  }
  labels_ = std::move(labels);
}

// ---------------------------------------------------------------------------
// Subgroup

bool Subgroup::contains(Elem e) const { return std::binary_search(members.begin(), members.end(), e); }

Bitset Subgroup::mask(std::size_t parent_order) const {
  Bitset b(parent_order);
  for (Elem e : members) b.set(e);
  return b;
}

Subgroup Subgroup::from_mask(const Bitset& mask) { return Subgroup{mask.elements()}; }

// ---------------------------------------------------------------------------
// Element helpers

std::size_t element_order(const TableGroup& g, Elem x) {
  std::size_t k = 1;
  Elem y = x;
  while (y != g.identity()) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

Elem power(const TableGroup& g, Elem x, std::uint64_t k) {
  Elem result = g.identity();
  Elem base = x;
  while (k) {
    if (k & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem commutator(const TableGroup& g, Elem x, Elem y) {
  return g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y)));
}

std::size_t exponent(const TableGroup& g) {
  std::size_t e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

bool is_abelian(const TableGroup& g) {
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup trivial_subgroup(const TableGroup& g) { return Subgroup{{g.identity()}}; }

Subgroup whole_group(const TableGroup& g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), Elem{0});
  return s;
}

Subgroup generate(const TableGroup& g, std::span<const Elem> gens) {
  Bitset seed(g.order());
  seed.set(g.identity());
  return Subgroup::from_mask(close_under(g, std::move(seed), gens));
}

Subgroup join(const TableGroup& g, const Subgroup& a, const Subgroup& b) {
  auto gens = greedy_generators(g, a);
  auto more = greedy_generators(g, b);
  gens.insert(gens.end(), more.begin(), more.end());
  return generate(g, gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

bool is_subgroup(const TableGroup& g, std::span<const Elem> members) {
  if (members.empty()) return false;
  Bitset m(g.order());
  for (Elem e : members) {
    if (e >= g.order()) return false;
    m.set(e);
  }
  if (!m.test(g.identity())) return false;
  for (Elem a : members) {
    if (!m.test(g.inverse(a))) return false;
    for (Elem b : members) {
      if (!m.test(g.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_normal(const TableGroup& g, const Subgroup& s) {
  const Bitset m = s.mask(g.order());
  const auto g_gens = greedy_generators(g, whole_group(g));
  const auto s_gens = greedy_generators(g, s);
  for (Elem x : g_gens) {
    const Elem xi = g.inverse(x);
    for (Elem n : s_gens) {
      if (!m.test(g.mul(g.mul(x, n), xi))) return false;
    }
  }
  return true;
}

Subgroup normal_closure(const TableGroup& g, std::span<const Elem> gens) {
  Bitset conj(g.order());
  for (Elem n : gens) {
    for (Elem x = 0; x < g.order(); ++x) conj.set(g.mul(g.mul(x, n), g.inverse(x)));
  }
  const auto all = conj.elements();
  return generate(g, all);
}

Subgroup center(const TableGroup& g) {
  const auto gens = greedy_generators(g, whole_group(g));
  Subgroup z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem s : gens) {
      if (g.mul(a, s) != g.mul(s, a)) {
        central = false;
        break;
      }
    }
    if (central) z.members.push_back(a);
  }
  return z;
}

Subgroup centralizer(const TableGroup& g, const Subgroup& s) {
  const auto gens = greedy_generators(g, s);
  Subgroup c;
  for (Elem a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elem x : gens) {
      if (g.mul(a, x) != g.mul(x, a)) {
        ok = false;
        break;
      }
    }
    if (ok) c.members.push_back(a);
  }
  return c;
}

Subgroup derived_subgroup(const TableGroup& g, const Subgroup& s) {
  Bitset comms(g.order());
  for (Elem a : s.members) {
    for (Elem b : s.members) comms.set(commutator(g, a, b));
  }
  const auto all = comms.elements();
  return generate(g, all);
}

Subgroup derived_subgroup(const TableGroup& g) { return derived_subgroup(g, whole_group(g)); }

std::vector<Subgroup> derived_series(const TableGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (true) {
    Subgroup next = derived_subgroup(g, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<std::vector<Elem>> conjugacy_classes(const TableGroup& g) {
  std::vector<std::vector<Elem>> classes;
  std::vector<char> seen(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    Bitset cls(g.order());
    for (Elem h = 0; h < g.order(); ++h) cls.set(g.mul(g.mul(h, x), g.inverse(h)));
    auto members = cls.elements();
    for (Elem y : members) seen[y] = 1;
    classes.push_back(std::move(members));
  }
  return classes;
}

std::vector<Elem> greedy_generators(const TableGroup& g, const Subgroup& s) {
  std::vector<Elem> gens;
  Bitset current(g.order());
  current.set(g.identity());
  for (Elem x : s.members) {
    if (current.test(x)) continue;
    gens.push_back(x);
    current = close_under(g, std::move(current), gens);
    if (current.count() == s.order()) break;
  }
  return gens;
}

StructureReport structure_report(const TableGroup& g) {
  StructureReport r;
  r.order = g.order();
  r.exponent = exponent(g);
  r.center_order = center(g).order();
  r.derived_order = derived_subgroup(g).order();
  r.is_abelian = r.derived_order == 1;
  const auto series = derived_series(g);
  r.derived_length = series.back().order() == 1 ? series.size() - 1 : 0;
  return r;
}

// ---------------------------------------------------------------------------
// Products and quotients

TableGroup direct_product(const TableGroup& g, const TableGroup& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  const std::size_t n = ng * nh;
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem ag = static_cast<Elem>(a / nh);
    const Elem ah = static_cast<Elem>(a % nh);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem bg = static_cast<Elem>(b / nh);
      const Elem bh = static_cast<Elem>(b % nh);
      mul[a * n + b] = static_cast<Elem>(std::size_t{g.mul(ag, bg)} * nh + h.mul(ah, bh));
    }
  }
  std::vector<std::string> labels;
  if (!g.labels().empty() || !h.labels().empty()) {
    labels.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back("(" + g.label(static_cast<Elem>(a / nh)) + "," +
                       h.label(static_cast<Elem>(a % nh)) + ")");
    }
  }
  return TableGroup::trusted(n, std::move(mul), std::move(labels));
}

TableGroup direct_product(std::span<const TableGroup> factors) {
  if (factors.empty()) return TableGroup::trusted(1, {0});
  TableGroup acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = direct_product(acc, factors[i]);
  return acc;
}

std::vector<Elem> product_components(std::span<const TableGroup> factors, Elem e) {
  std::vector<Elem> comps(factors.size());
  std::size_t rest = e;
  for (std::size_t i = factors.size(); i-- > 0;) {
    comps[i] = static_cast<Elem>(rest % factors[i].order());
    rest /= factors[i].order();
  }
  return comps;
}

Elem product_element(std::span<const TableGroup> factors, std::span<const Elem> components) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i].order() + components[i];
  return static_cast<Elem>(idx);
}

Quotient quotient_with_map(const TableGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n.members)) throw Error(Errc::InvalidArgument, "not a subgroup");
  if (!is_normal(g, n)) throw Error(Errc::NotNormal, "quotient by a non-normal subgroup");
  Quotient q{TableGroup::trusted(1, {0}), std::vector<Elem>(g.order(), 0), {}};
  std::vector<char> assigned(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    const auto c = static_cast<Elem>(q.representatives.size());
    q.representatives.push_back(x);
    for (Elem m : n.members) {
      const Elem y = g.mul(x, m);
      q.projection[y] = c;
      assigned[y] = 1;
    }
  }
  const std::size_t k = q.representatives.size();
  std::vector<Elem> mul(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      mul[i * k + j] = q.projection[g.mul(q.representatives[i], q.representatives[j])];
    }
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (Elem r : q.representatives) labels.push_back(g.label(r));
  }
  q.group = TableGroup::trusted(k, std::move(mul), std::move(labels));
  return q;
}

TableGroup quotient(const TableGroup& g, const Subgroup& n) { return quotient_with_map(g, n).group; }

Elem EmbeddedGroup::to_local(Elem parent_elem) const {
  auto it = std::lower_bound(embedding.begin(), embedding.end(), parent_elem);
  if (it == embedding.end() || *it != parent_elem) {
    throw Error(Errc::InvalidArgument, "element not in embedded subgroup");
  }
  return static_cast<Elem>(it - embedding.begin());
}

EmbeddedGroup subgroup_as_group(const TableGroup& g, const Subgroup& s) {
  EmbeddedGroup out{TableGroup::trusted(1, {0}), s.members};
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < s.members.size(); ++i) local[s.members[i]] = static_cast<Elem>(i);
  const std::size_t k = s.order();
  std::vector<Elem> mul(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) mul[i * k + j] = local[g.mul(s.members[i], s.members[j])];
  }
  out.group = TableGroup::trusted(k, std::move(mul));
  return out;
}

// ---------------------------------------------------------------------------
// Index-p subgroups

namespace {

struct ElementaryQuotient {
  Quotient quotient;
  std::vector<Elem> basis;                     // in the quotient
  std::vector<std::vector<std::uint32_t>> coords;  // quotient element -> coordinates
};

ElementaryQuotient frattini_quotient(const TableGroup& g, std::uint32_t p) {
  Bitset gens(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    gens.set(power(g, a, p));
    for (Elem b = 0; b < g.order(); ++b) gens.set(commutator(g, a, b));
  }
  const auto all = gens.elements();
  const Subgroup k = generate(g, all);
  ElementaryQuotient eq{quotient_with_map(g, k), {}, {}};
  const TableGroup& v = eq.quotient.group;

  // Greedy basis by lowest index; the span is tracked as a subgroup.
  Subgroup span = trivial_subgroup(v);
  for (Elem x = 0; x < v.order(); ++x) {
    if (span.contains(x)) continue;
    eq.basis.push_back(x);
    span = generate(v, eq.basis);
  }
  const std::size_t r = eq.basis.size();
  eq.coords.assign(v.order(), std::vector<std::uint32_t>(r, 0));
  std::vector<std::uint32_t> c(r, 0);
  // Enumerate all coefficient vectors and record which element they give.
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= p;
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    Elem e = v.identity();
    for (std::size_t i = 0; i < r; ++i) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
      e = v.mul(e, power(v, eq.basis[i], c[i]));
    }
    eq.coords[e] = c;
  }
  return eq;
}

}  // namespace

std::size_t frattini_quotient_rank(const TableGroup& g, std::uint32_t p) {
  return frattini_quotient(g, p).basis.size();
}

std::vector<Subgroup> index_p_subgroups(const TableGroup& g, std::uint32_t p) {
  if (p < 2) throw Error(Errc::InvalidArgument, "p must be prime");
  const auto eq = frattini_quotient(g, p);
  const std::size_t r = eq.basis.size();
  std::vector<Subgroup> out;
  if (r == 0) return out;

  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= p;
  std::vector<std::uint32_t> f(r);
  for (std::size_t t = 1; t < total; ++t) {
    std::size_t rest = t;
    for (std::size_t i = 0; i < r; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    // Normalized functionals: first nonzero coordinate equals 1.
    auto first = std::find_if(f.begin(), f.end(), [](std::uint32_t x) { return x != 0; });
    if (*first != 1) continue;
    Subgroup h;
    for (Elem a = 0; a < g.order(); ++a) {
      const auto& c = eq.coords[eq.quotient.projection[a]];
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < r; ++i) s += std::uint64_t{f[i]} * c[i];
      if (s % p == 0) h.members.push_back(a);
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Minimal normal subgroups

std::vector<Subgroup> minimal_normal_subgroups(const TableGroup& g) {
  if (g.order() <= 1) return {};
  std::vector<Bitset> closures;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == g.identity()) continue;
    Bitset m = generate(g, cls).mask(g.order());
    if (seen.insert(m).second) closures.push_back(std::move(m));
  }
  std::vector<Subgroup> out;
  for (const auto& a : closures) {
    bool minimal = true;
    for (const auto& b : closures) {
      if (!(a == b) && b.is_subset_of(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(Subgroup::from_mask(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Abelian witness

namespace {

// Exhaustive search for a complement to `u` inside the abelian subgroup `s`.
std::optional<Bitset> find_complement(const TableGroup& g, const Bitset& s, const Bitset& u,
                                      std::size_t target) {
  const Elem e = g.identity();
  const auto candidates = s.elements();
  std::unordered_set<Bitset, BitsetHash> visited;
  std::vector<Bitset> stack;
  Bitset start(g.order());
  start.set(e);
  stack.push_back(start);
  while (!stack.empty()) {
    Bitset c = std::move(stack.back());
    stack.pop_back();
    const std::size_t size = c.count();
    if (size == target) return c;
    if (!visited.insert(c).second) continue;
    // Push in reverse so that the lowest-index extension is explored first.
    std::vector<Bitset> next;
    for (Elem x : candidates) {
      if (c.test(x)) continue;
      std::vector<Elem> gens{x};
      Bitset d = close_under(g, c, gens);
      const std::size_t dsize = d.count();
      if (dsize > target || target % dsize != 0) continue;
      Bitset meet = d;
      meet &= u;
      if (meet.count() != 1) continue;
      if (visited.count(d)) continue;
      next.push_back(std::move(d));
    }
    for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(std::move(*it));
  }
  return std::nullopt;
}

void peel_cyclic(const TableGroup& g, Bitset s, std::vector<Subgroup>& out) {
  while (s.count() > 1) {
    Elem best = g.identity();
    std::size_t best_order = 1;
    for (Elem x : s.elements()) {
      const std::size_t o = element_order(g, x);
      if (o > best_order) {
        best_order = o;
        best = x;
      }
    }
    std::vector<Elem> gens{best};
    Subgroup u = generate(g, gens);
    const std::size_t target = s.count() / u.order();
    auto comp = find_complement(g, s, u.mask(g.order()), target);
    if (!comp) throw std::logic_error("abelian_witness: no complement to a maximal cyclic subgroup");
    out.push_back(std::move(u));
    s = std::move(*comp);
  }
}

}  // namespace

AbelianWitness abelian_witness(const TableGroup& g) {
  if (!is_abelian(g)) throw Error(Errc::NotAbelian, "abelian_witness needs an abelian group");
  AbelianWitness w;
  for (std::uint32_t r : prime_factors(g.order())) {
    Bitset sylow(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      if (is_power_of(element_order(g, x), r)) sylow.set(x);
    }
    peel_cyclic(g, std::move(sylow), w.cyclic_factors);
  }

  std::vector<std::vector<Elem>> factor_gens;
  for (const auto& u : w.cyclic_factors) factor_gens.push_back(greedy_generators(g, u));
  for (std::size_t i = 0; i < w.cyclic_factors.size(); ++i) {
    std::vector<Elem> gens;
    for (std::size_t j = 0; j < w.cyclic_factors.size(); ++j) {
      if (j != i) gens.insert(gens.end(), factor_gens[j].begin(), factor_gens[j].end());
    }
    Subgroup h = generate(g, gens);
    w.indices.push_back(g.order() / h.order());
    w.complements.push_back(std::move(h));
  }

  const std::size_t exp = exponent(g);
  Subgroup meet = whole_group(g);
  for (std::size_t i = 0; i < w.complements.size(); ++i) {
    meet = intersect(meet, w.complements[i]);
    if (w.indices[i] > exp) throw std::logic_error("abelian_witness: index exceeds exponent");
    if (w.indices[i] != w.cyclic_factors[i].order()) {
      throw std::logic_error("abelian_witness: index differs from cyclic factor order");
    }
  }
  if (meet.order() != 1) throw std::logic_error("abelian_witness: nontrivial joint intersection");
  return w;
}

// ---------------------------------------------------------------------------
// Product-quotient bound

ProductQuotientVerdict product_quotient_check(std::span<const TableGroup> factors,
                                              const TableGroup& product, const Subgroup& h,
                                              const Subgroup& n) {
  if (!is_subgroup(product, h.members)) throw Error(Errc::InvalidArgument, "H is not a subgroup");
  if (!std::includes(h.members.begin(), h.members.end(), n.members.begin(), n.members.end())) {
    throw Error(Errc::InvalidArgument, "N is not contained in H");
  }
  const EmbeddedGroup local = subgroup_as_group(product, h);
  Subgroup n_local;
  for (Elem x : n.members) n_local.members.push_back(local.to_local(x));
  const TableGroup q = quotient(local.group, n_local);  // throws NotNormal

  ProductQuotientVerdict v;
  v.quotient_order = q.order();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].order() > v.witness_factor_order) {
      v.witness_factor_order = factors[i].order();
      v.witness_factor = i;
    }
  }
  if (q.order() == 1) {
    v.vacuous = true;
    return v;
  }
  for (const auto& m : minimal_normal_subgroups(q)) {
    v.minimal_normal_order = std::max(v.minimal_normal_order, m.order());
  }
  // Report the first (lowest-index) factor that is large enough.
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].order() >= v.minimal_normal_order) {
      v.witness_factor = i;
      v.witness_factor_order = factors[i].order();
      break;
    }
  }
  v.holds = v.witness_factor_order >= v.minimal_normal_order;
  return v;
}

// ---------------------------------------------------------------------------
// Exhaustive subgroup enumeration

std::vector<Subgroup> enumerate_subgroups(const TableGroup& g) {
  if (g.order() > 256) {
    throw Error(Errc::CapExceeded, "subgroup enumeration is limited to order 256");
  }
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> found;
  std::vector<std::vector<Elem>> gens_of;
  Bitset triv(g.order());
  triv.set(g.identity());
  seen.insert(triv);
  found.push_back(triv);
  gens_of.push_back({});
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Elem x = 0; x < g.order(); ++x) {
      if (found[head].test(x)) continue;
      std::vector<Elem> gens = gens_of[head];
      gens.push_back(x);
      Bitset next = close_under(g, found[head], gens);
      if (seen.insert(next).second) {
        found.push_back(std::move(next));
        gens_of.push_back(std::move(gens));
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& b : found) out.push_back(Subgroup::from_mask(b));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

void write_table(std::ostream& os, const TableGroup& g) {
  os << "order " << g.order() << '\n';
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      if (b) os << ' ';
      os << g.mul(a, b);
    }
    os << '\n';
  }
}

TableGroup read_table(std::istream& is, std::size_t cap) {
  std::string keyword;
  std::size_t n = 0;
  if (!(is >> keyword >> n) || keyword != "order") {
    throw Error(Errc::ParseError, "expected header 'order n'");
  }
  if (n > cap) throw Error(Errc::CapExceeded, "order " + std::to_string(n) + " exceeds cap");
  std::vector<Elem> mul(n * n);
  for (auto& v : mul) {
    long long x = 0;
    if (!(is >> x)) throw Error(Errc::ParseError, "truncated table");
    if (x < 0) throw Error(Errc::ParseError, "negative entry");
    v = static_cast<Elem>(x);
  }
  return TableGroup::from_table(n, std::move(mul), cap);
}

}  // namespace localdeg
