#pragma once

// Exact symbolic integers built from literals, powers, products and sums,
// for bounds far too large to write out.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "localdeg/bigint.hpp"

namespace localdeg {

inline constexpr std::uint64_t kDefaultCapBits = 1'000'000;

class TowerExpr {
 public:
  enum class Kind { Literal, Power, Product, Sum };

  /// The literal 0.
  TowerExpr();

  static TowerExpr literal(BigInt value);  // value >= 0
  static TowerExpr power(TowerExpr base, TowerExpr exponent);
  /// At least two factors / terms.
  static TowerExpr product(std::vector<TowerExpr> factors);
  static TowerExpr sum(std::vector<TowerExpr> terms);

  Kind kind() const noexcept;
  const BigInt& value() const;  // Literal only
  const TowerExpr& base() const;  // Power only
  const TowerExpr& exponent() const;  // Power only
  const std::vector<TowerExpr>& children() const;  // Product and Sum

  /// Canonical text: no spaces, `^` right-associative, parentheses only where
  /// the grammar needs them.
  std::string to_string() const;
  /// Grammar: sum := prod ('+' prod)*; prod := pow ('*' pow)*;
  /// pow := atom ('^' pow)?; atom := integer | '(' sum ')'. Throws ParseError.
  static TowerExpr parse(std::string_view text);

  friend bool operator==(const TowerExpr& a, const TowerExpr& b);

 private:
  struct Node;
  explicit TowerExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Upper bound on the bit length of the value; nullopt when the bound itself
/// does not fit in 64 bits.
std::optional<std::uint64_t> predicted_bits(const TowerExpr& e);

/// Exact value when predicted_bits(e) <= cap_bits, computed without ever
/// attempting a larger exponentiation.
std::optional<BigInt> evaluate_within(const TowerExpr& e, std::uint64_t cap_bits = kDefaultCapBits);

/// Folds literal arithmetic inside sums, products and exponents (exponents
/// are evaluated when they fit in 64 bits), flattens nested sums and
/// products, and merges powers of a common literal base: 27*3^29 -> 3^32.
/// Powers in product or sum position are kept as powers.
TowerExpr simplify(const TowerExpr& e);

/// Exact three-way comparison when both sides evaluate within the cap, or
/// when both are powers of the same literal base (compares exponents).
std::optional<int> compare(const TowerExpr& a, const TowerExpr& b,
                           std::uint64_t cap_bits = kDefaultCapBits);

}  // namespace localdeg
