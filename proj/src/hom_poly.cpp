#include "rankone/hom_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankone {

HomPoly::HomPoly(int t_exp, const UniPoly& finite) : t_exp_(t_exp), finite_(finite.monic()) {
  if (finite.is_zero()) throw std::invalid_argument("HomPoly finite part must be nonzero");
  if (t_exp < 0) throw std::invalid_argument("negative t exponent");
}

HomPoly HomPoly::zero(FieldSpec field) { return HomPoly(ZeroTag{}, field); }

int HomPoly::degree() const {
  if (zero_) throw std::domain_error("degree of the zero homogeneous polynomial");
  return t_exp_ + finite_.degree();
}

std::string HomPoly::to_string() const {
  if (zero_) return "0";
  const int d = finite_.degree();
  std::string out;
  for (int k = d; k >= 0; --k) {
    const Scalar c = finite_.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    const int te = t_exp_ + d - k;
    std::string mono;
    if (te > 0) mono += te == 1 ? "t" : "t^" + std::to_string(te);
    if (k > 0) {
      if (!mono.empty()) mono += "*";
      mono += k == 1 ? "s" : "s^" + std::to_string(k);
    }
    std::string term;
    if (!c.is_one() || mono.empty()) term = c.to_string();
    if (!mono.empty()) term += (term.empty() ? "" : "*") + mono;
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

namespace {
void require_same_field(const HomPoly& a, const HomPoly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("homogeneous polynomials over different fields");
}
}  // namespace

bool divides(const HomPoly& a, const HomPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  return a.t_exp() <= b.t_exp() && divides(a.finite(), b.finite());
}

HomPoly gcd(const HomPoly& a, const HomPoly& b) {
  require_same_field(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return HomPoly(std::min(a.t_exp(), b.t_exp()), gcd(a.finite(), b.finite()));
}

HomPoly lcm(const HomPoly& a, const HomPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return HomPoly::zero(a.field());
  return HomPoly(std::max(a.t_exp(), b.t_exp()), lcm(a.finite(), b.finite()));
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return HomPoly::zero(a.field());
  return HomPoly(a.t_exp() + b.t_exp(), a.finite() * b.finite());
}

HomPoly quotient(const HomPoly& a, const HomPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw NotDivisible("division by the zero homogeneous polynomial");
  if (a.is_zero()) return a;
  if (!divides(b, a)) throw NotDivisible(b.to_string() + " does not divide " + a.to_string());
  return HomPoly(a.t_exp() - b.t_exp(), exact_quotient(a.finite(), b.finite()));
}

HomPoly chain_at(const std::vector<HomPoly>& chain, int i, const FieldSpec& field) {
  if (i < 1) return HomPoly::one(field);
  if (static_cast<std::size_t>(i) > chain.size()) return HomPoly::zero(field);
  return chain[static_cast<std::size_t>(i) - 1];
}

}  // namespace rankone
