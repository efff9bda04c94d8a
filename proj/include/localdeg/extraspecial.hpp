#pragma once

// Extraspecial groups of order p^(2m+1) and exponent p (p odd), as explicit
// tables and as pairs (u, a) with u in F_p^(2m), a in F_p.

#include <cstdint>
#include <string>
#include <vector>

#include "localdeg/group.hpp"

namespace localdeg {

/// (u, a)(v, b) = (u + v, a + b + beta(u, v)) with
/// beta(u, v) = sum_i u[2i] * v[2i+1] (0-based coordinates).
/// Element index: sum_k u[k] p^k + a p^(2m).
class SymplecticExtraspecial {
 public:
  struct Point {
    std::vector<std::uint32_t> u;
    std::uint32_t a = 0;
  };

  /// p odd prime, m >= 1. Throws CapExceeded if the order does not fit an Elem.
  SymplecticExtraspecial(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return 0; }

  Point decode(Elem x) const;
  Elem encode(const Point& pt) const;
  std::uint32_t beta(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v) const;

  Elem mul(Elem x, Elem y) const;
  Elem inverse(Elem x) const;
  /// (u, a)^k = (k u, k a + C(k, 2) beta(u, u)).
  Elem power(Elem x, std::uint64_t k) const;
  /// [x, y] = x y x^-1 y^-1 = (0, beta(u, v) - beta(v, u)).
  Elem commutator(Elem x, Elem y) const;

  /// Element (0, a).
  Elem central(std::uint32_t a) const;
  /// x_i = (e_{2i}, 0) and y_i = (e_{2i+1}, 0), i = 0..m-1.
  Elem x_gen(std::uint32_t i) const;
  Elem y_gen(std::uint32_t i) const;
  /// x_0, y_0, x_1, y_1, ...
  std::vector<Elem> generators() const;
  std::string label(Elem x) const;

 private:
  std::uint32_t p_;
  std::uint32_t m_;
  std::size_t order_;
};

struct HeisenbergPair {
  /// Upper unitriangular 3x3 matrices mod p; index x + p y + p^2 z for
  /// [[1, x, z], [0, 1, y], [0, 0, 1]].
  TableGroup table;
  SymplecticExtraspecial model;
  /// Table element -> model element.
  std::vector<Elem> isomorphism;
};

/// Throws InvalidArgument for p = 2 or composite p, CapExceeded if p^3 > cap.
HeisenbergPair heisenberg(std::uint32_t p, std::size_t cap = kDefaultTableCap);

struct QuotientConstruction {
  TableGroup product;       // H^m
  Subgroup kernel;          // N_m inside H^m
  TableGroup group;         // H^m / N_m
  SymplecticExtraspecial model;
  /// Quotient element -> model element.
  std::vector<Elem> isomorphism;
  bool isomorphism_verified = false;
};

/// (H x ... x H) / N_m with N_m = {(z^a_1, ..., z^a_m) : sum a_i = 0 mod p}.
/// Throws CapExceeded when p^(3m) exceeds the table cap.
QuotientConstruction extraspecial_by_quotient(std::uint32_t p, std::uint32_t m,
                                              std::size_t cap = kDefaultTableCap);

struct ExtraspecialReport {
  std::uint32_t p = 0;
  std::size_t order = 0;
  std::size_t exponent = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t frattini_order = 0;
  bool quotient_elementary_abelian = false;
  bool center_equals_derived = false;
  bool verdict = false;
};

/// Exhaustive on the table.
ExtraspecialReport verify_extraspecial(const TableGroup& g, std::uint32_t p);
/// Structural on the model: the center and the derived subgroup are read off
/// the radical and the image of the alternating form beta(u,v) - beta(v,u).
ExtraspecialReport verify_extraspecial(const SymplecticExtraspecial& g);

struct AbelianSearch {
  std::size_t max_order = 0;
  Subgroup witness;
  std::size_t abelian_subgroups = 0;
  /// max_order == p^(m+1): an abelian subgroup meets the bound with equality.
  bool bound_attained = false;
  bool bound_holds = false;
};

/// Breadth-first search over all abelian subgroups (extend by centralizing
/// elements, deduplicate by member set). Throws InvalidArgument for abelian
/// input.
AbelianSearch max_abelian_subgroup_order(const TableGroup& g, std::uint32_t p, std::uint32_t m);

struct BoundedIndexIntersection {
  Subgroup intersection;
  std::size_t subgroups_used = 0;  // including G itself
  bool contains_center = false;
};

/// Intersection of all subgroups of index < p^m in a p-group, reached by
/// iterating index-p subgroups.
BoundedIndexIntersection bounded_index_intersection(const TableGroup& g, std::uint32_t p,
                                                    std::uint32_t m);

}  // namespace localdeg
