#include "localdeg/fq.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "localdeg/error.hpp"

namespace localdeg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= (1U << 31) || !is_prime(q)) {
    throw Error(Errc::InvalidArgument, std::to_string(q) + " is not a supported prime");
  }
}

Fq PrimeField::pow(Fq a, std::uint64_t k) const noexcept {
  Fq r = 1 % q_;
  Fq b = a % q_;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

Fq PrimeField::inv(Fq a) const {
  if (a % q_ == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
  return pow(a, q_ - 2);
}

Fq PrimeField::reduce(std::int64_t x) const noexcept {
  const std::int64_t r = x % static_cast<std::int64_t>(q_);
  return static_cast<Fq>(r < 0 ? r + q_ : r);
}

Fq PrimeField::least_primitive_root_of_unity(std::uint32_t n) const {
  if (n == 0 || (q_ - 1) % n != 0) {
    throw Error(Errc::NoRootOfUnity, std::to_string(n) + " does not divide " + std::to_string(q_ - 1));
  }
  for (Fq z = 1; z < q_; ++z) {
    if (pow(z, n) != 1) continue;
    bool primitive = true;
    for (std::uint32_t d = 1; d < n && primitive; ++d) {
      if (n % d == 0 && pow(z, d) == 1) primitive = false;
    }
    if (primitive) return z;
  }
  throw Error(Errc::NoRootOfUnity, "none found");
}

// ---------------------------------------------------------------------------

FqMatrix::FqMatrix(std::size_t rows, std::size_t cols, std::uint32_t q)
    : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(std::size_t n, std::uint32_t q) { return scalar(n, q, 1); }

FqMatrix FqMatrix::scalar(std::size_t n, std::uint32_t q, Fq c) {
  FqMatrix m(n, n, q);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c % q;
  return m;
}

FqMatrix FqMatrix::from_rows(std::uint32_t q, const std::vector<std::vector<Fq>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FqMatrix m(rows.size(), cols, q);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::InvalidArgument, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j] % q;
  }
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (cols_ != o.rows_ || q_ != o.q_) throw Error(Errc::InvalidArgument, "shape mismatch in product");
  FqMatrix r(rows_, o.cols_, q_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = at(i, k);
      if (!a) continue;
      const Fq* orow = &o.data_[k * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * orow[j]) % q_;
    }
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) = static_cast<Fq>(acc[j]);
  }
  return r;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || q_ != o.q_) {
    throw Error(Errc::InvalidArgument, "shape mismatch in sum");
  }
  FqMatrix r(rows_, cols_, q_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % q_;
  return r;
}

std::vector<Fq> FqMatrix::apply(std::span<const Fq> v) const {
  if (v.size() != cols_) throw Error(Errc::InvalidArgument, "vector length mismatch");
  std::vector<Fq> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = (s + std::uint64_t{at(i, j)} * v[j]) % q_;
    out[i] = static_cast<Fq>(s);
  }
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(cols_, rows_, q_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

FqMatrix FqMatrix::kron(const FqMatrix& o) const {
  FqMatrix r(rows_ * o.rows_, cols_ * o.cols_, q_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::uint64_t a = at(i, j);
      for (std::size_t k = 0; k < o.rows_; ++k) {
        for (std::size_t l = 0; l < o.cols_; ++l) {
          r.at(i * o.rows_ + k, j * o.cols_ + l) = static_cast<Fq>(a * o.at(k, l) % q_);
        }
      }
    }
  }
  return r;
}

FqMatrix FqMatrix::rref(std::vector<std::size_t>* pivots) const {
  const PrimeField f(q_);
  FqMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && m.at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
    }
    const Fq inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Fq factor = m.at(i, c);
      if (!factor) continue;
      for (std::size_t j = c; j < cols_; ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
      }
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t FqMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

FqMatrix FqMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  const FqMatrix r = rref(&piv);
  std::vector<char> is_pivot(cols_, 0);
  for (std::size_t c : piv) is_pivot[c] = 1;
  const PrimeField f(q_);
  FqMatrix basis(cols_ - piv.size(), cols_, q_);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    basis.at(k, free) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) basis.at(k, piv[i]) = f.neg(r.at(i, free));
    ++k;
  }
  return basis;
}

FqMatrix FqMatrix::inverse() const {
  if (rows_ != cols_) throw Error(Errc::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  FqMatrix aug(n, 2 * n, q_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  const FqMatrix r = aug.rref(&piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(Errc::InvalidArgument, "singular matrix");
  FqMatrix inv(n, n, q_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  }
  return inv;
}

bool FqMatrix::is_identity() const {
  auto s = scalar_value();
  return s && *s == 1;
}

std::optional<Fq> FqMatrix::scalar_value() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  const Fq c = at(0, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != (i == j ? c : 0)) return std::nullopt;
    }
  }
  return c;
}

bool FqMatrix::is_permutation() const {
  if (rows_ != cols_) return false;
  std::vector<char> col_hit(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Fq v = at(i, j);
      if (v == 0) continue;
      if (v != 1 || col_hit[j]) return false;
      col_hit[j] = 1;
      ++ones;
    }
    if (ones != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

FqSubspace::FqSubspace(std::size_t ambient, std::uint32_t q) : ambient_(ambient), q_(q) {}

FqSubspace FqSubspace::span_of_rows(const FqMatrix& m) {
  FqSubspace s(m.cols(), m.q());
  for (std::size_t i = 0; i < m.rows(); ++i) s.insert(m.row(i));
  return s;
}

std::vector<Fq> FqSubspace::reduce(std::span<const Fq> v) const {
  if (v.size() != ambient_) throw Error(Errc::InvalidArgument, "vector length mismatch");
  const PrimeField f(q_);
  std::vector<Fq> w(v.begin(), v.end());
  for (auto& x : w) x %= q_;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Fq c = w[pivots_[k]];
    if (!c) continue;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(c, basis_[k][j]));
  }
  return w;
}

bool FqSubspace::contains(std::span<const Fq> v) const {
  const auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Fq x) { return x == 0; });
}

bool FqSubspace::insert(std::span<const Fq> v) {
  auto w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](Fq x) { return x != 0; });
  if (it == w.end()) return false;
  const PrimeField f(q_);
  const std::size_t p = static_cast<std::size_t>(it - w.begin());
  const Fq inv = f.inv(w[p]);
  for (std::size_t j = p; j < ambient_; ++j) w[j] = f.mul(w[j], inv);
  for (auto& row : basis_) {
    const Fq c = row[p];
    if (!c) continue;
    for (std::size_t j = p; j < ambient_; ++j) row[j] = f.sub(row[j], f.mul(c, w[j]));
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(w));
  return true;
}

FqMatrix FqSubspace::basis_matrix() const {
  FqMatrix m(basis_.size(), ambient_, q_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < ambient_; ++j) m.at(i, j) = basis_[i][j];
  }
  return m;
}

// ---------------------------------------------------------------------------

void write_matrix(std::ostream& os, const FqMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::InvalidArgument, "only square matrices are serialized");
  os << m.rows() << ' ' << m.q() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
    os << '\n';
  }
}

FqMatrix read_matrix(std::istream& is) {
  std::size_t n = 0;
  std::uint32_t q = 0;
  if (!(is >> n >> q)) throw Error(Errc::ParseError, "expected header 'dim q'");
  PrimeField f(q);
  FqMatrix m(n, n, q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long v = 0;
      if (!(is >> v)) throw Error(Errc::ParseError, "truncated matrix");
      if (v < 0 || static_cast<unsigned long long>(v) >= q) {
        throw Error(Errc::ParseError, "entry out of range");
      }
      m.at(i, j) = static_cast<Fq>(v);
    }
  }
  return m;
}

}  // namespace localdeg
