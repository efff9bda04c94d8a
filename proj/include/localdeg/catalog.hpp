#pragma once

// Small named groups used as oracles and scan inputs.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "localdeg/group.hpp"

namespace localdeg {

/// A permutation of {0..n-1}; composition is (a*b)(i) = a(b(i)).
using Perm = std::vector<std::uint8_t>;

/// Closure of the generators under composition, elements sorted
/// lexicographically (so the identity permutation is element 0).
TableGroup permutation_group(std::size_t degree, std::span<const Perm> gens,
                             std::size_t cap = kDefaultTableCap);

TableGroup cyclic(std::size_t n);
TableGroup elementary_abelian(std::uint32_t p, std::size_t rank);
TableGroup symmetric(std::size_t n);
TableGroup alternating(std::size_t n);
/// Symmetries of the n-gon, order 2n. Index i + n*j is r^i s^j.
TableGroup dihedral(std::size_t n);
TableGroup quaternion();

struct NamedGroup {
  std::string name;
  TableGroup group;
};

/// One representative of every isomorphism class of order at most 8
/// (14 groups, including the trivial group).
std::vector<NamedGroup> small_groups_up_to_8();

}  // namespace localdeg
