#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace localdeg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace localdeg
