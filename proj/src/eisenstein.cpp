#include "localdeg/eisenstein.hpp"

#include "localdeg/error.hpp"
#include "localdeg/fq.hpp"

namespace localdeg {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Nearest integer to u / n for n > 0.
BigInt round_div(const BigInt& u, const BigInt& n) { return floor_div(2 * u + n, 2 * n); }

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  return r < 0 ? r + m : r;
}

std::string format(const std::string& a, const std::string& b, bool b_is_zero, bool a_is_zero) {
  if (b_is_zero) return a;
  std::string wpart = b == "1" ? "w" : (b == "-1" ? "-w" : b + "*w");
  if (a_is_zero) return wpart;
  if (wpart.front() == '-') return a + " - " + wpart.substr(1);
  return a + " + " + wpart;
}

}  // namespace

std::string EisensteinInt::to_string() const { return format(a.str(), b.str(), b == 0, a == 0); }

std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& x, const EisensteinInt& y) {
  if (y.is_zero()) throw Error(Errc::DivisionFailure, "division by zero in Z[w]");
  const BigInt n = y.norm();
  const EisensteinInt num = x * y.conj();
  const EisensteinInt q{round_div(num.a, n), round_div(num.b, n)};
  return {q, x - q * y};
}

bool divides(const EisensteinInt& d, const EisensteinInt& x) {
  if (d.is_zero()) return x.is_zero();
  return divmod(x, d).second.is_zero();
}

EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& d) {
  auto [q, r] = divmod(x, d);
  if (!r.is_zero()) throw Error(Errc::DivisionFailure, d.to_string() + " does not divide " + x.to_string());
  return q;
}

EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
  while (!y.is_zero()) {
    EisensteinInt r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ExtendedGcd extended_gcd(const EisensteinInt& x, const EisensteinInt& y) {
  EisensteinInt r0 = x, r1 = y;
  EisensteinInt s0{1}, s1{0}, t0{0}, t1{1};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return {r0, s0, t0};
}

EisensteinInt crt(const EisensteinInt& r1, const EisensteinInt& m1, const EisensteinInt& r2,
                  const EisensteinInt& m2) {
  const ExtendedGcd e = extended_gcd(m1, m2);
  if (!e.g.is_unit()) throw Error(Errc::InvalidArgument, "CRT moduli are not coprime");
  // s m1 = g (mod m2), and g^-1 = conj(g) for a unit.
  const EisensteinInt z = r1 + m1 * ((r2 - r1) * e.s * e.g.conj());
  return divmod(z, m1 * m2).second;
}

EisensteinInt pow(const EisensteinInt& x, std::uint64_t k) {
  EisensteinInt r{1}, b = x;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

SplitData eisenstein_split(std::uint64_t q) {
  if (!is_prime(q)) throw Error(Errc::InvalidArgument, std::to_string(q) + " is not prime");
  if (q == 3) throw Error(Errc::Ramified, "3 ramifies in Z[w]");
  if (q % 3 == 2) return {true, EisensteinInt{BigInt(q)}};
  // a^2 - a b + b^2 = q: for fixed b, a = (b + sqrt(4q - 3b^2)) / 2.
  for (std::uint64_t b = 1; 3 * b * b <= 4 * q; ++b) {
    const std::uint64_t disc = 4 * q - 3 * b * b;
    const auto s = static_cast<std::uint64_t>(boost::multiprecision::sqrt(BigInt(disc)));
    if (s * s != disc) continue;
    for (std::int64_t a : {(static_cast<std::int64_t>(b) - static_cast<std::int64_t>(s)) / 2,
                           (static_cast<std::int64_t>(b) + static_cast<std::int64_t>(s)) / 2}) {
      if (a < 0 || (b + s) % 2 != 0) continue;
      EisensteinInt pi{BigInt(a), BigInt(b)};
      if (pi.norm() == q) return {false, pi};
    }
  }
  throw std::logic_error("eisenstein_split: no element of norm q");
}

BigInt omega_image(const EisensteinInt& pi, std::uint64_t q, std::uint64_t k) {
  BigInt w = -1;
  for (std::uint64_t x = 0; x < q; ++x) {
    if ((x * x + x + 1) % q == 0 && mod(pi.a + pi.b * x, BigInt(q)) == 0) {
      w = x;
      break;
    }
  }
  if (w < 0) throw Error(Errc::InvalidArgument, "pi does not lie over a split prime q");
  BigInt modulus = big_pow(q, k);
  // Newton steps for x^2 + x + 1 double the precision each time.
  for (std::uint64_t prec = 1; prec < k; prec *= 2) {
    const BigInt f = w * w + w + 1;
    const BigInt fp = 2 * w + 1;
    // fp is a unit mod q because (2w + 1)^2 = -3.
    BigInt r0 = mod(fp, modulus), r1 = modulus, s0 = 1, s1 = 0;
    while (r1 != 0) {
      BigInt qq = r0 / r1;
      r0 = std::exchange(r1, r0 - qq * r1);
      s0 = std::exchange(s1, s0 - qq * s1);
    }
    w = mod(w - f * s0, modulus);
  }
  return mod(w, modulus);
}

BigInt reduce_at(const EisensteinInt& x, const BigInt& w_image, const BigInt& modulus) {
  return mod(x.a + x.b * w_image, modulus);
}

EisensteinRat EisensteinRat::inverse() const {
  const BigRational n = a * a - a * b + b * b;
  if (n == 0) throw Error(Errc::DivisionFailure, "inverse of zero in Q(w)");
  return {(a - b) / n, -b / n};
}

std::optional<EisensteinInt> EisensteinRat::as_integer() const {
  if (denominator(a) != 1 || denominator(b) != 1) return std::nullopt;
  return EisensteinInt{numerator(a), numerator(b)};
}

std::string EisensteinRat::to_string() const {
  auto s = [](const BigRational& r) {
    return denominator(r) == 1 ? numerator(r).str() : numerator(r).str() + "/" + denominator(r).str();
  };
  return format(s(a), s(b), b == 0, a == 0);
}

}  // namespace localdeg
