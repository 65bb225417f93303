#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace thurstonkit {

// Exact rational number backed by GMP. Always in lowest terms with a positive
// denominator, so equality is structural.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class value);

  // Accepts "n", "-n", "n/d". Throws MalformedInput.
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  Rat abs() const;
  double to_double() const { return value_.get_d(); }

  // "n" for integers, "n/d" otherwise.
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);  // throws ContractViolation on zero

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& lhs, const Rat& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Converts an integral Rat to int64. Throws ContractViolation if it is not an
// integer or does not fit.
std::int64_t to_int64(const Rat& r);

// Fixed-length vector of exact rationals.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t dim) : coords_(dim) {}
  explicit RatVec(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  RatVec(std::initializer_list<Rat> coords) : coords_(coords) {}

  static RatVec zeros(std::size_t dim) { return RatVec(dim); }
  static RatVec unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_integral() const;

  RatVec operator-() const;
  RatVec& operator+=(const RatVec& rhs);
  RatVec& operator-=(const RatVec& rhs);
  RatVec& operator*=(const Rat& s);
  friend RatVec operator+(RatVec lhs, const RatVec& rhs) { return lhs += rhs; }
  friend RatVec operator-(RatVec lhs, const RatVec& rhs) { return lhs -= rhs; }
  friend RatVec operator*(RatVec v, const Rat& s) { return v *= s; }
  friend RatVec operator*(const Rat& s, RatVec v) { return v *= s; }

  // "(a, b, c)" with each entry printed by Rat::str.
  std::string str() const;

  friend bool operator==(const RatVec&, const RatVec&) = default;
  friend std::strong_ordering operator<=>(const RatVec& lhs, const RatVec& rhs);

 private:
  std::vector<Rat> coords_;
};

std::ostream& operator<<(std::ostream& os, const RatVec& v);

Rat dot(const RatVec& lhs, const RatVec& rhs);

// Smallest positive multiple of v with coprime integer entries. The zero vector
// is returned unchanged.
RatVec primitive_integer(const RatVec& v);

// Dense rectangular matrix. The column count is stored explicitly so that
// 0 x n matrices are representable.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols);
  // Rows must share one dimension; cols is taken from it (or from cols_hint
  // when rows is empty).
  static RatMat from_rows(std::vector<RatVec> rows, std::size_t cols_hint = 0);
  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const RatVec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<RatVec>& row_vectors() const { return rows_; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

  RatMat transpose() const;
  RatVec operator*(const RatVec& x) const;
  RatMat operator*(const RatMat& rhs) const;

  friend bool operator==(const RatMat&, const RatMat&) = default;

 private:
  std::vector<RatVec> rows_;
  std::size_t cols_ = 0;
};

}  // namespace thurstonkit
