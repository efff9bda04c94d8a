#include "localdeg/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "localdeg/error.hpp"

namespace localdeg {

namespace {

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

bool is_even(const Perm& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0;
}

TableGroup from_perm_list(std::vector<Perm> elems) {
  std::sort(elems.begin(), elems.end());
  std::map<Perm, Elem> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elem>(i);
  const std::size_t n = elems.size();
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = index.at(compose(elems[a], elems[b]));
  }
  return TableGroup::trusted(n, std::move(mul));
}

std::vector<Perm> all_perms(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TableGroup permutation_group(std::size_t degree, std::span<const Perm> gens, std::size_t cap) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  for (const auto& g : gens) {
    if (g.size() != degree) throw Error(Errc::InvalidArgument, "generator has wrong degree");
  }
  std::map<Perm, bool> seen{{id, true}};
  std::vector<Perm> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = compose(elems[head], g);
      if (seen.emplace(next, true).second) {
        elems.push_back(std::move(next));
        if (elems.size() > cap) throw Error(Errc::CapExceeded, "permutation group exceeds cap");
      }
    }
  }
  return from_perm_list(std::move(elems));
}

TableGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclic group of order 0");
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return TableGroup::trusted(n, std::move(mul));
}

TableGroup elementary_abelian(std::uint32_t p, std::size_t rank) {
  std::vector<TableGroup> factors(rank, cyclic(p));
  return direct_product(factors);
}

TableGroup symmetric(std::size_t n) { return from_perm_list(all_perms(n)); }

TableGroup alternating(std::size_t n) {
  auto perms = all_perms(n);
  std::erase_if(perms, [](const Perm& p) { return !is_even(p); });
  return from_perm_list(std::move(perms));
}

TableGroup dihedral(std::size_t n) {
  const std::size_t order = 2 * n;
  std::vector<Elem> mul(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, a = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % n, b = y / n;
      // r^i s^a r^k s^b = r^(i +- k) s^(a+b), since s r s^-1 = r^-1.
      const std::size_t rot = a ? (i + n - k) % n : (i + k) % n;
      mul[x * order + y] = static_cast<Elem>(rot + n * ((a + b) % 2));
    }
  }
  return TableGroup::trusted(order, std::move(mul));
}

TableGroup quaternion() {
  // Units 1, i, j, k with signs; index = 4 * negative + unit.
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Elem> mul(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      const int neg = (x / 4 + y / 4 + sign[u][v]) % 2;
      mul[x * 8 + y] = static_cast<Elem>(4 * neg + unit[u][v]);
    }
  }
  return TableGroup::trusted(8, std::move(mul));
}

std::vector<NamedGroup> small_groups_up_to_8() {
  std::vector<NamedGroup> out;
  out.push_back({"C1", cyclic(1)});
  out.push_back({"C2", cyclic(2)});
  out.push_back({"C3", cyclic(3)});
  out.push_back({"C4", cyclic(4)});
  out.push_back({"C2xC2", elementary_abelian(2, 2)});
  out.push_back({"C5", cyclic(5)});
  out.push_back({"C6", cyclic(6)});
  out.push_back({"S3", symmetric(3)});
  out.push_back({"C7", cyclic(7)});
  out.push_back({"C8", cyclic(8)});
  out.push_back({"C4xC2", direct_product(cyclic(4), cyclic(2))});
  out.push_back({"C2xC2xC2", elementary_abelian(2, 3)});
  out.push_back({"D4", dihedral(4)});
  out.push_back({"Q8", quaternion()});
  return out;
}

}  // namespace localdeg
