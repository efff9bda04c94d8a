#pragma once

// Finite groups given by explicit multiplication tables, plus the subgroup
// machinery the verification suites are built on.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "localdeg/bitset.hpp"

namespace localdeg {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultTableCap = 2048;

/// Anything with indexed elements 0..order()-1 and a group law.
template <class G>
concept FiniteGroup = requires(const G& g, Elem a, Elem b) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.mul(a, b) } -> std::convertible_to<Elem>;
  { g.inverse(a) } -> std::convertible_to<Elem>;
  { g.identity() } -> std::convertible_to<Elem>;
};

class TableGroup {
 public:
  /// Validates a raw row-major table. Checks, in order: shape and range,
  /// Latin-square property, two-sided identity, two-sided inverses and
  /// associativity (exhaustive). Throws Error naming the first violation.
  static TableGroup from_table(std::size_t order, std::vector<Elem> mul,
                               std::size_t cap = kDefaultTableCap);

  /// Builds a group from a table known to satisfy the axioms (products and
  /// quotients of validated groups). Identity and inverses are recomputed.
  static TableGroup trusted(std::size_t order, std::vector<Elem> mul,
                            std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[std::size_t{a} * order_ + b]; }
  Elem identity() const noexcept { return identity_; }
  Elem inverse(Elem a) const noexcept { return inv_[a]; }
  std::span<const Elem> table() const noexcept { return mul_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Elem a) const;
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const TableGroup& a, const TableGroup& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  TableGroup() = default;
  void compute_identity_and_inverses();

  std::size_t order_ = 0;
  std::vector<Elem> mul_;
  Elem identity_ = 0;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
};

/// A subgroup of some parent group, stored as the sorted list of member
/// indices. The parent is passed explicitly to every operation.
struct Subgroup {
  std::vector<Elem> members;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(Elem e) const;
  Bitset mask(std::size_t parent_order) const;
  static Subgroup from_mask(const Bitset& mask);

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

struct StructureReport {
  std::size_t order = 0;
  std::size_t exponent = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  bool is_abelian = false;
  /// 0 for the trivial group and for groups whose derived series stalls.
  std::size_t derived_length = 0;
};

// Element-level helpers.
std::size_t element_order(const TableGroup& g, Elem x);
Elem power(const TableGroup& g, Elem x, std::uint64_t k);
Elem commutator(const TableGroup& g, Elem x, Elem y);
std::size_t exponent(const TableGroup& g);
bool is_abelian(const TableGroup& g);

// Subgroup construction and tests.
Subgroup trivial_subgroup(const TableGroup& g);
Subgroup whole_group(const TableGroup& g);
Subgroup generate(const TableGroup& g, std::span<const Elem> gens);
Subgroup join(const TableGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subgroup(const TableGroup& g, std::span<const Elem> members);
bool is_normal(const TableGroup& g, const Subgroup& s);
Subgroup normal_closure(const TableGroup& g, std::span<const Elem> gens);
Subgroup center(const TableGroup& g);
Subgroup centralizer(const TableGroup& g, const Subgroup& s);
/// Subgroup generated by all commutators [x, y] with x, y in `s`.
Subgroup derived_subgroup(const TableGroup& g, const Subgroup& s);
Subgroup derived_subgroup(const TableGroup& g);
/// G = G^(0) > G' > G'' > ... down to the first repeated term.
std::vector<Subgroup> derived_series(const TableGroup& g);
std::vector<std::vector<Elem>> conjugacy_classes(const TableGroup& g);
/// A generating set chosen greedily by lowest index.
std::vector<Elem> greedy_generators(const TableGroup& g, const Subgroup& s);

StructureReport structure_report(const TableGroup& g);

/// Product with mixed-radix indexing: (g, h) has index g * |H| + h.
TableGroup direct_product(const TableGroup& g, const TableGroup& h);
/// Iterated product; the first factor is the most significant digit.
TableGroup direct_product(std::span<const TableGroup> factors);
std::vector<Elem> product_components(std::span<const TableGroup> factors, Elem e);
Elem product_element(std::span<const TableGroup> factors, std::span<const Elem> components);

struct Quotient {
  TableGroup group;
  /// Parent element -> coset index. Cosets are numbered by increasing
  /// minimal representative.
  std::vector<Elem> projection;
  /// Coset index -> its minimal representative in the parent.
  std::vector<Elem> representatives;
};

Quotient quotient_with_map(const TableGroup& g, const Subgroup& n);
TableGroup quotient(const TableGroup& g, const Subgroup& n);

struct EmbeddedGroup {
  TableGroup group;
  /// Local index -> parent index (sorted ascending, so local order matches).
  std::vector<Elem> embedding;
  Elem to_local(Elem parent_elem) const;
};

EmbeddedGroup subgroup_as_group(const TableGroup& g, const Subgroup& s);

/// Kernels of all surjections G -> C_p, as preimages of the hyperplanes of
/// the elementary abelian quotient G / (G' G^p). Sorted by member list.
std::vector<Subgroup> index_p_subgroups(const TableGroup& g, std::uint32_t p);

/// Rank of G / (G' G^p) over F_p.
std::size_t frattini_quotient_rank(const TableGroup& g, std::uint32_t p);

/// All minimal normal subgroups, found as the minimal normal closures of
/// single conjugacy classes. Sorted by member list.
std::vector<Subgroup> minimal_normal_subgroups(const TableGroup& g);

struct AbelianWitness {
  /// Cyclic factors U_i of the decomposition, each as a subgroup.
  std::vector<Subgroup> cyclic_factors;
  /// H_i = product of all U_j with j != i.
  std::vector<Subgroup> complements;
  std::vector<std::size_t> indices;
};

/// Decomposes an abelian group into cyclic factors of prime-power order
/// (greedy maximal-order peeling inside each Sylow subgroup) and returns the
/// complements H_i. The post-conditions (trivial joint intersection, each
/// index at most exp(G)) are asserted before returning.
AbelianWitness abelian_witness(const TableGroup& g);

struct ProductQuotientVerdict {
  bool holds = true;
  bool vacuous = false;  // H/N trivial: no minimal normal subgroup exists
  std::size_t quotient_order = 0;
  std::size_t minimal_normal_order = 0;  // largest minimal normal subgroup of H/N
  std::size_t witness_factor = 0;        // index of a factor with |factor| >= that order
  std::size_t witness_factor_order = 0;
};

/// H is a subgroup of the direct product of `factors`, N a normal subgroup of
/// H. Checks that some factor is at least as large as every minimal normal
/// subgroup of H/N.
ProductQuotientVerdict product_quotient_check(std::span<const TableGroup> factors,
                                              const TableGroup& product, const Subgroup& h,
                                              const Subgroup& n);

/// Every subgroup of a small group (order <= 256), by closure from cyclic
/// subgroups. Intended for exhaustive scans only.
std::vector<Subgroup> enumerate_subgroups(const TableGroup& g);

/// Text format: "order n" then n lines of n space-separated indices.
void write_table(std::ostream& os, const TableGroup& g);
TableGroup read_table(std::istream& is, std::size_t cap = kDefaultTableCap);

/// Checks that `map` (source element -> target element) is a bijective
/// homomorphism. Exhaustive over all pairs.
template <FiniteGroup A, FiniteGroup B>
bool is_isomorphism(const A& source, const B& target, std::span<const Elem> map) {
  if (source.order() != target.order() || map.size() != source.order()) return false;
  std::vector<char> hit(target.order(), 0);
  for (Elem x : map) {
    if (x >= target.order() || hit[x]) return false;
    hit[x] = 1;
  }
  const auto n = static_cast<Elem>(source.order());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

/// Materializes any finite group as a table (trusted: the law comes from a
/// group implementation).
template <FiniteGroup G>
TableGroup to_table(const G& g, std::size_t cap = kDefaultTableCap);

}  // namespace localdeg

#include "localdeg/error.hpp"

namespace localdeg {

template <FiniteGroup G>
TableGroup to_table(const G& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap) {
    throw Error(Errc::CapExceeded,
                "group of order " + std::to_string(n) + " exceeds table cap " + std::to_string(cap));
  }
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mul[a * n + b] = g.mul(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }
  return TableGroup::trusted(n, std::move(mul));
}

}  // namespace localdeg
