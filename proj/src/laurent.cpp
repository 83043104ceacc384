#include "strathom/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace strathom {

LaurentPoly::LaurentPoly(const BigRational& c) {
  if (signum(c) != 0) coeffs_[0] = c;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_[0] = BigRational(c);
}

LaurentPoly LaurentPoly::term(const BigRational& c, int e) {
  LaurentPoly p;
  if (signum(c) != 0) p.coeffs_[e] = c;
  return p;
}

LaurentPoly LaurentPoly::t_power(int e) { return term(BigRational(1), e); }

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second == 1;
}

int LaurentPoly::lowest_exponent() const {
  if (is_zero()) throw std::domain_error("lowest_exponent of zero");
  return coeffs_.begin()->first;
}

int LaurentPoly::highest_exponent() const {
  if (is_zero()) throw std::domain_error("highest_exponent of zero");
  return coeffs_.rbegin()->first;
}

int LaurentPoly::span() const { return highest_exponent() - lowest_exponent(); }

BigRational LaurentPoly::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? BigRational(0) : it->second;
}

void LaurentPoly::add_term(int e, const BigRational& c) {
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    if (signum(c) != 0) coeffs_[e] = c;
    return;
  }
  it->second += c;
  if (signum(it->second) == 0) coeffs_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  auto a = coeffs_.begin(), b = o.coeffs_.begin();
  for (; a != coeffs_.end() && b != o.coeffs_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return coeffs_.size() < o.coeffs_.size();
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(
    const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly divmod by zero");
  if (is_zero()) return {LaurentPoly(), LaurentPoly()};

  // Shift both operands so they are ordinary polynomials with nonzero
  // constant term, divide by degree, and shift the results back.
  const int ma = lowest_exponent();
  const int md = d.lowest_exponent();
  LaurentPoly rem = shifted(-ma);
  const LaurentPoly den = d.shifted(-md);
  const int dden = den.highest_exponent();
  const BigRational lead = den.coeff(dden);

  LaurentPoly quot;
  while (!rem.is_zero() && rem.highest_exponent() >= dden) {
    const int e = rem.highest_exponent() - dden;
    const BigRational c = rem.coeff(rem.highest_exponent()) / lead;
    const LaurentPoly t = term(c, e);
    quot += t;
    rem -= t * den;
  }
  return {quot.shifted(ma - md), rem.shifted(ma)};
}

bool LaurentPoly::divides(const LaurentPoly& multiple) const {
  if (is_zero()) return multiple.is_zero();
  return multiple.divmod(*this).second.is_zero();
}

LaurentPoly LaurentPoly::canonical_unit() const {
  if (is_zero()) return LaurentPoly(1L);
  return term(coeff(highest_exponent()), lowest_exponent());
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("unit_inverse: not a unit");
  const auto& [e, c] = *coeffs_.begin();
  return term(BigRational(1) / c, -e);
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return LaurentPoly();
  return *this * canonical_unit().unit_inverse();
}

BigRational LaurentPoly::evaluate_at_one() const {
  BigRational s(0);
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const int e = it->first;
    BigRational c = it->second;
    if (first) {
      if (signum(c) < 0) out << "-";
    } else {
      out << (signum(c) < 0 ? "-" : "+");
    }
    first = false;
    c = abs(c);
    const bool unit_coeff = (c == 1);
    if (e == 0 || !unit_coeff) out << strathom::to_string(c);
    if (e != 0) {
      if (!unit_coeff) out << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a, y = b;
  while (!y.is_zero()) {
    LaurentPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.normalized();
}

}  // namespace strathom
