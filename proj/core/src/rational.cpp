#include "thurstonkit/rational.hpp"

#include <limits>
#include <sstream>

#include "thurstonkit/errors.hpp"

namespace thurstonkit {
namespace {

static_assert(sizeof(long) == sizeof(std::int64_t), "gmpxx conversions assume LP64");

mpz_class to_mpz(std::int64_t n) { return mpz_class(static_cast<long>(n)); }

}  // namespace

Rat::Rat(std::int64_t n) : value_(to_mpz(n)) {}

Rat::Rat(std::int64_t num, std::int64_t den) : Rat(to_mpz(num), to_mpz(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ContractViolation("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw ContractViolation("rational with zero denominator");
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw MalformedInput("not a rational: '" + s + "'");
    return Rat(mpz_class(strip_plus(s)), mpz_class(1));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw MalformedInput("not a rational: '" + s + "'");
  mpz_class d(strip_plus(den));
  if (d == 0) throw MalformedInput("zero denominator in '" + s + "'");
  return Rat(mpz_class(strip_plus(num)), d);
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw ContractViolation("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::int64_t to_int64(const Rat& r) {
  if (!r.is_integer()) throw ContractViolation("expected an integer, got " + r.str());
  const mpz_class& n = r.value().get_num();
  if (!n.fits_slong_p()) throw ContractViolation("integer out of 64-bit range: " + r.str());
  return n.get_si();
}

RatVec RatVec::unit(std::size_t dim, std::size_t i) {
  RatVec v(dim);
  v[i] = Rat(1);
  return v;
}

bool RatVec::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool RatVec::is_integral() const {
  for (const auto& c : coords_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

RatVec RatVec::operator-() const {
  RatVec out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

RatVec& RatVec::operator+=(const RatVec& rhs) {
  if (rhs.dim() != dim()) throw ContractViolation("vector dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& rhs) {
  if (rhs.dim() != dim()) throw ContractViolation("vector dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

RatVec& RatVec::operator*=(const Rat& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string RatVec::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].str();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const RatVec& lhs, const RatVec& rhs) {
  const std::size_t n = std::min(lhs.dim(), rhs.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = lhs[i] <=> rhs[i]; c != 0) return c;
  }
  return lhs.dim() <=> rhs.dim();
}

std::ostream& operator<<(std::ostream& os, const RatVec& v) { return os << v.str(); }

Rat dot(const RatVec& lhs, const RatVec& rhs) {
  if (lhs.dim() != rhs.dim()) throw ContractViolation("dot: dimension mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < lhs.dim(); ++i) acc += lhs[i].value() * rhs[i].value();
  return Rat(std::move(acc));
}

RatVec primitive_integer(const RatVec& v) {
  if (v.is_zero()) return v;
  mpz_class l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.dim());
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_class n = c.value().get_num() * (l / c.value().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  RatVec out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rat(ints[i] / g, mpz_class(1));
  return out;
}

RatMat::RatMat(std::size_t rows, std::size_t cols) : rows_(rows, RatVec(cols)), cols_(cols) {}

RatMat RatMat::from_rows(std::vector<RatVec> rows, std::size_t cols_hint) {
  RatMat m;
  m.cols_ = rows.empty() ? cols_hint : rows.front().dim();
  for (const auto& r : rows) {
    if (r.dim() != m.cols_) throw ContractViolation("matrix rows of unequal length");
  }
  m.rows_ = std::move(rows);
  return m;
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  return t;
}

RatVec RatMat::operator*(const RatVec& x) const {
  if (x.dim() != cols_) throw ContractViolation("matrix-vector dimension mismatch");
  RatVec out(rows());
  for (std::size_t i = 0; i < rows(); ++i) out[i] = dot(rows_[i], x);
  return out;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
  if (rhs.rows() != cols_) throw ContractViolation("matrix product dimension mismatch");
  RatMat out(rows(), rhs.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += rows_[i][k].value() * rhs(k, j).value();
      out(i, j) = Rat(std::move(acc));
    }
  return out;
}

}  // namespace thurstonkit
