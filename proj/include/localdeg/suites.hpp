#pragma once

// Verification suites and bound computations packaged as reports. Each
// function is deterministic given its arguments.

#include <cstdint>
#include <string>
#include <vector>

#include "localdeg/group.hpp"
#include "localdeg/kummer.hpp"
#include "localdeg/report.hpp"
#include "localdeg/tower.hpp"

namespace localdeg {

Report suite_extraspecial(std::uint32_t p, std::uint32_t m, std::size_t cap = kDefaultTableCap);
/// Throws NoRootOfUnity unless p divides q - 1.
Report suite_module(std::uint32_t p, std::uint32_t q, std::uint32_t m, std::size_t samples = 100,
                    std::uint64_t seed = 1, std::size_t cap = kDefaultTableCap);
Report suite_semidirect(std::uint32_t p, std::uint32_t q, std::uint32_t m, std::size_t samples = 1000,
                        std::uint64_t seed = 1);
/// The group is either a catalogue name (C1 ... Q8) or, when `group` is
/// empty, the product of cyclic groups of the given orders.
Report suite_abelian_witness(const std::string& group, const std::vector<std::size_t>& cyclic_orders);

struct ProductQuotientScan {
  std::size_t products = 0;
  std::size_t subgroups = 0;       // H, summed over products
  std::size_t configurations = 0;  // pairs N normal in H
  std::size_t vacuous = 0;         // N = H
  std::size_t violations = 0;
  std::vector<std::string> violation_examples;
};

/// Every pair (H, N), H a subgroup of the product and N normal in H, for
/// the product of every unordered pair of catalogue groups of order at most
/// max_factor_order, plus the triple product C2 x C2 x C2.
ProductQuotientScan product_quotient_scan(std::size_t max_factor_order = 8);
Report suite_product_quotient(std::size_t max_factor_order = 8);

Report suite_kummer_formal(std::uint32_t m, std::uint64_t seed = 1);

Report bounds_derived(std::uint64_t b, std::uint64_t n, std::uint64_t cap_bits = kDefaultCapBits);
Report bounds_abelian(std::uint64_t b, std::uint64_t cap_bits = kDefaultCapBits);
Report bounds_pq(std::uint64_t p, std::uint64_t q, std::uint64_t cap_bits = kDefaultCapBits);
Report bounds_factorial(std::uint64_t b);
Report bounds_local_count(std::uint64_t p, std::uint64_t d);

Report realize_kummer(std::uint32_t m, std::uint64_t seed = 1, const KummerOptions& opt = {});
Report realize_embedding(std::uint32_t p, std::uint32_t q, std::uint32_t m, std::size_t samples = 100,
                         std::uint64_t seed = 1);

Json tower_to_json(const RadicalTower& t);

}  // namespace localdeg
