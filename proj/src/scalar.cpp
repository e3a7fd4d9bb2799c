#include "rankone/scalar.hpp"

#include <ostream>
#include <utility>

namespace rankone {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime_number(p))
    throw InvalidField("GF(p) requires a prime 2 <= p < 2^31, got " + std::to_string(p));
  return FieldSpec(Kind::prime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

std::uint64_t field_size(const FieldSpec& field) { return field.is_prime() ? field.modulus() : 0; }

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit values; p < 2^31 keeps everything in range.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar::Scalar(FieldSpec field) : field_(field) {
  if (field.is_prime())
    value_ = std::uint32_t{0};
  else
    value_ = mpq_class(0);
}

Scalar::Scalar(FieldSpec field, std::int64_t v) : field_(field) {
  if (field.is_prime())
    value_ = reduce(v, field.modulus());
  else
    value_ = mpq_class(mpz_class(static_cast<long>(v)));
}

Scalar::Scalar(FieldSpec field, const mpz_class& v) : field_(field) {
  if (field.is_prime())
    value_ = reduce(v, field.modulus());
  else
    value_ = mpq_class(v);
}

Scalar::Scalar(FieldSpec field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (field.is_prime()) {
    const std::uint32_t d = reduce(den, field.modulus());
    if (d == 0) throw DivisionByZero("denominator vanishes modulo p");
    const std::uint64_t n = reduce(num, field.modulus());
    value_ = static_cast<std::uint32_t>(n * inverse_mod(d, field.modulus()) % field.modulus());
  } else {
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  }
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_))
    throw FieldMismatch("operands live in " + field_.to_string() + " and " + rhs.field_.to_string());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r(*this);
  if (field_.is_prime())
    r.value_ = inverse_mod(std::get<std::uint32_t>(value_), field_.modulus());
  else
    r.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime()) {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + rhs.residue();
    value_ = static_cast<std::uint32_t>(s % field_.modulus());
  } else {
    std::get<mpq_class>(value_) += rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.modulus();
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + p - rhs.residue();
    value_ = static_cast<std::uint32_t>(s % p);
  } else {
    std::get<mpq_class>(value_) -= rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime()) {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * rhs.residue();
    value_ = static_cast<std::uint32_t>(s % field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar operator-(const Scalar& a) {
  Scalar r(a.field_);
  r -= a;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.value_ == b.value_;
}

std::size_t Scalar::height() const {
  if (field_.is_prime()) return 0;
  const mpq_class& q = std::get<mpq_class>(value_);
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint32_t>(value_));
  const mpq_class& q = std::get<mpq_class>(value_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t Scalar::hash() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_);
  return std::hash<std::string>{}(to_string());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar arith(ArithOp op, const Scalar& a, const Scalar* b) {
  const auto need_b = [&]() -> const Scalar& {
    if (b == nullptr) throw std::invalid_argument("binary operation needs two operands");
    return *b;
  };
  switch (op) {
    case ArithOp::add: return a + need_b();
    case ArithOp::sub: return a - need_b();
    case ArithOp::mul: return a * need_b();
    case ArithOp::div: return a / need_b();
    case ArithOp::inv: return a.inverse();
    case ArithOp::neg: return -a;
  }
  return a;
}

}  // namespace rankone
