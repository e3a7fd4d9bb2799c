#include "rankone/uni_poly.hpp"

#include <algorithm>

namespace rankone {

UniPoly::UniPoly(FieldSpec field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_)
    if (!(c.field() == field_)) throw FieldMismatch("coefficient outside " + field_.to_string());
  trim();
}

UniPoly::UniPoly(FieldSpec field, std::initializer_list<std::int64_t> coeffs) : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (std::int64_t c : coeffs) coeffs_.emplace_back(field, c);
  trim();
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.field(), std::vector<Scalar>{c}); }

UniPoly UniPoly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar::zero(c.field()));
  v.back() = c;
  return UniPoly(c.field(), std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UniPoly::require_same_field(const UniPoly& rhs) const {
  if (!(field_ == rhs.field_))
    throw FieldMismatch("polynomials over " + field_.to_string() + " and " + rhs.field_.to_string());
}

Scalar UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_); }

Scalar UniPoly::leading() const { return coeffs_.empty() ? Scalar::zero(field_) : coeffs_.back(); }

int UniPoly::valuation() const {
  int v = 0;
  while (static_cast<std::size_t>(v) < coeffs_.size() && coeffs_[v].is_zero()) ++v;
  return is_zero() ? 0 : v;
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inverse());
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(field_);
  std::vector<Scalar> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(coeffs_[k] * Scalar(field_, static_cast<std::int64_t>(k)));
  return UniPoly(field_, std::move(d));
}

Scalar UniPoly::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::scaled(const Scalar& c) const {
  UniPoly r(*this);
  for (Scalar& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  UniPoly r(field_);
  r.coeffs_.assign(static_cast<std::size_t>(k), Scalar::zero(field_));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

std::size_t UniPoly::height() const {
  std::size_t h = 0;
  for (const Scalar& c : coeffs_) h = std::max(h, c.height());
  return h;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  require_same_field(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly operator-(const UniPoly& a) { return UniPoly(a.field()) - a; }

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c.is_one();
    if (!unit || k == 0) out += c.to_string();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("divmod across fields");
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const FieldSpec field = a.field();
  if (a.degree() < b.degree()) return {UniPoly(field), a};
  std::vector<Scalar> rem = a.coeffs();
  const std::vector<Scalar>& bc = b.coeffs();
  const Scalar lead_inv = b.leading().inverse();
  const std::size_t db = bc.size() - 1;
  std::vector<Scalar> quot(rem.size() - db, Scalar::zero(field));
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Scalar q = rem[k] * lead_inv;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
  return {UniPoly(field, std::move(quot)), UniPoly(field, std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

bool divides(const UniPoly& d, const UniPoly& f) {
  if (d.is_zero()) return f.is_zero();
  return (f % d).is_zero();
}

UniPoly exact_quotient(const UniPoly& f, const UniPoly& d) {
  if (d.is_zero()) {
    if (f.is_zero()) throw NotDivisible("0/0 is undetermined");
    throw NotDivisible("division by the zero polynomial");
  }
  auto [q, r] = divmod(f, d);
  if (!r.is_zero()) throw NotDivisible(d.to_string() + " does not divide " + f.to_string());
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("gcd across fields");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    if (!(a.field() == b.field())) throw FieldMismatch("lcm across fields");
    return UniPoly(a.field());
  }
  return (a.monic() / gcd(a, b) * b).monic();
}

std::pair<UniPoly, UniPoly> gcd_lcm(const UniPoly& a, const UniPoly& b) { return {gcd(a, b), lcm(a, b)}; }

UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& m) {
  UniPoly result = UniPoly::one(m.field()) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1U) result = result * base % m;
    e >>= 1U;
    if (e > 0) base = base * base % m;
  }
  return result;
}

}  // namespace rankone
