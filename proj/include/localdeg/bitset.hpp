#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace localdeg {

/// Fixed-size set of element indices, used for membership tests and
/// deduplication while enumerating subgroups.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const noexcept;
  bool is_subset_of(const Bitset& other) const noexcept;
  Bitset& operator&=(const Bitset& other) noexcept;
  std::vector<std::uint32_t> elements() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace localdeg
