#pragma once

// The Eisenstein integers Z[w], w^2 + w + 1 = 0, and their fraction field.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "localdeg/bigint.hpp"

namespace localdeg {

struct EisensteinInt {
  BigInt a = 0;  // a + b w
  BigInt b = 0;

  EisensteinInt() = default;
  EisensteinInt(BigInt a_, BigInt b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
  static EisensteinInt omega() { return {0, 1}; }

  BigInt norm() const { return a * a - a * b + b * b; }
  /// Complex conjugate: w -> w^2 = -1 - w.
  EisensteinInt conj() const { return {a - b, -b}; }
  bool is_zero() const { return a == 0 && b == 0; }
  bool is_unit() const { return norm() == 1; }
  std::string to_string() const;

  friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend EisensteinInt operator-(const EisensteinInt& x) { return {-x.a, -x.b}; }
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

/// Euclidean division with N(r) < N(y). Throws DivisionFailure for y = 0.
std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& x, const EisensteinInt& y);
bool divides(const EisensteinInt& d, const EisensteinInt& x);
/// Exact quotient; throws DivisionFailure when d does not divide x.
EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& d);
EisensteinInt gcd(EisensteinInt x, EisensteinInt y);

struct ExtendedGcd {
  EisensteinInt g, s, t;  // s x + t y = g
};
ExtendedGcd extended_gcd(const EisensteinInt& x, const EisensteinInt& y);

/// z with z = r1 mod m1 and z = r2 mod m2; m1, m2 coprime (InvalidArgument
/// otherwise). The result is reduced modulo m1 m2.
EisensteinInt crt(const EisensteinInt& r1, const EisensteinInt& m1, const EisensteinInt& r2,
                  const EisensteinInt& m2);

EisensteinInt pow(const EisensteinInt& x, std::uint64_t k);

struct SplitData {
  bool inert = false;
  EisensteinInt pi;  // N(pi) = q when split
};

/// q = 1 mod 3 splits as pi * conj(pi), found by searching the norm form;
/// q = 2 mod 3 is inert; q = 3 throws Ramified.
SplitData eisenstein_split(std::uint64_t q);

/// Image of w in Z/q^k under the map Z[w] -> Z[w]/pi^k = Z/q^k, for a split
/// prime pi of norm q (the root of x^2 + x + 1 with pi -> 0, Hensel lifted).
BigInt omega_image(const EisensteinInt& pi, std::uint64_t q, std::uint64_t k);
/// a + b w  ->  a + b omega_image (mod q^k).
BigInt reduce_at(const EisensteinInt& x, const BigInt& w_image, const BigInt& modulus);

/// Element of Q(w), coordinates rational.
struct EisensteinRat {
  BigRational a = 0;
  BigRational b = 0;

  EisensteinRat() = default;
  EisensteinRat(BigRational a_, BigRational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
  EisensteinRat(const EisensteinInt& x) : a(x.a), b(x.b) {}

  bool is_zero() const { return a == 0 && b == 0; }
  EisensteinRat inverse() const;  // throws DivisionFailure for 0
  std::optional<EisensteinInt> as_integer() const;
  std::string to_string() const;

  friend EisensteinRat operator+(const EisensteinRat& x, const EisensteinRat& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend EisensteinRat operator-(const EisensteinRat& x, const EisensteinRat& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend EisensteinRat operator*(const EisensteinRat& x, const EisensteinRat& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend bool operator==(const EisensteinRat&, const EisensteinRat&) = default;
};

}  // namespace localdeg
