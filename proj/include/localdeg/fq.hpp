#pragma once

// Exact linear algebra over prime fields F_q.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace localdeg {

using Fq = std::uint32_t;

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  /// Throws InvalidArgument unless q is a prime below 2^31.
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }
  Fq add(Fq a, Fq b) const noexcept { return static_cast<Fq>((std::uint64_t{a} + b) % q_); }
  Fq sub(Fq a, Fq b) const noexcept { return static_cast<Fq>((std::uint64_t{a} + q_ - b) % q_); }
  Fq mul(Fq a, Fq b) const noexcept { return static_cast<Fq>(std::uint64_t{a} * b % q_); }
  Fq neg(Fq a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Fq pow(Fq a, std::uint64_t k) const noexcept;
  /// Throws InvalidArgument for 0.
  Fq inv(Fq a) const;
  Fq reduce(std::int64_t x) const noexcept;
  /// Least element of multiplicative order exactly n; throws NoRootOfUnity
  /// when n does not divide q - 1.
  Fq least_primitive_root_of_unity(std::uint32_t n) const;

 private:
  std::uint32_t q_;
};

class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols, std::uint32_t q);
  static FqMatrix identity(std::size_t n, std::uint32_t q);
  static FqMatrix scalar(std::size_t n, std::uint32_t q, Fq c);
  static FqMatrix from_rows(std::uint32_t q, const std::vector<std::vector<Fq>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t q() const noexcept { return q_; }
  Fq& at(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Fq at(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  std::span<const Fq> row(std::size_t i) const noexcept { return {&data_[i * cols_], cols_}; }
  std::span<const Fq> data() const noexcept { return data_; }

  FqMatrix operator*(const FqMatrix& other) const;
  FqMatrix operator+(const FqMatrix& other) const;
  std::vector<Fq> apply(std::span<const Fq> v) const;  // M v
  FqMatrix transpose() const;
  FqMatrix kron(const FqMatrix& other) const;
  /// Throws InvalidArgument if singular or not square.
  FqMatrix inverse() const;
  std::size_t rank() const;
  /// Reduced row echelon form; `pivots` receives the pivot columns.
  FqMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /// Basis of {v : M v = 0}, one vector per row of the result.
  FqMatrix nullspace() const;

  bool is_identity() const;
  /// Returns c when the matrix is c times the identity.
  std::optional<Fq> scalar_value() const;
  bool is_permutation() const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t q_ = 2;
  std::vector<Fq> data_;
};

/// A subspace of F_q^n kept as a reduced echelon basis.
class FqSubspace {
 public:
  FqSubspace(std::size_t ambient, std::uint32_t q);
  static FqSubspace span_of_rows(const FqMatrix& m);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::uint32_t q() const noexcept { return q_; }
  /// Adds v to the span; returns whether the dimension grew.
  bool insert(std::span<const Fq> v);
  bool contains(std::span<const Fq> v) const;
  const std::vector<std::vector<Fq>>& basis() const noexcept { return basis_; }
  FqMatrix basis_matrix() const;

 private:
  std::vector<Fq> reduce(std::span<const Fq> v) const;

  std::size_t ambient_;
  std::uint32_t q_;
  std::vector<std::vector<Fq>> basis_;  // sorted by pivot
  std::vector<std::size_t> pivots_;
};

/// Text format: "dim q" then dim rows of dim decimal entries.
void write_matrix(std::ostream& os, const FqMatrix& m);
FqMatrix read_matrix(std::istream& is);

}  // namespace localdeg
