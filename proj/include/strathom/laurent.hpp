/*
 * laurent.hpp
 *
 * Laurent polynomials over the rationals, the coefficient ring used for
 * twisted chain complexes. A value is a finite map exponent -> coefficient
 * with all coefficients nonzero; two values are equal iff the maps are.
 * Units are exactly the nonzero monomials c*t^k.
 */

#ifndef STRATHOM_LAURENT_HPP
#define STRATHOM_LAURENT_HPP

#include <map>
#include <string>
#include <utility>

#include "strathom/numeric.hpp"

namespace strathom {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const BigRational& c);
  explicit LaurentPoly(long c);

  /// c * t^e
  static LaurentPoly term(const BigRational& c, int e);
  static LaurentPoly t_power(int e);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_unit() const { return coeffs_.size() == 1; }
  bool is_one() const;

  /// Lowest/highest exponent with nonzero coefficient; requires nonzero.
  int lowest_exponent() const;
  int highest_exponent() const;
  /// highest - lowest; the Euclidean size after unit normalization.
  int span() const;

  BigRational coeff(int e) const;
  const std::map<int, BigRational>& terms() const { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  /// Deterministic total order (for sorting; no algebraic meaning).
  bool operator<(const LaurentPoly& o) const;

  /// this * t^k
  LaurentPoly shifted(int k) const;

  /// Euclidean division after unit normalization: *this = q*d + r with
  /// span(r) < span(d) or r = 0. Throws on division by zero.
  std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& d) const;
  bool divides(const LaurentPoly& multiple) const;

  /// The unit u with (*this)/u monic and of lowest exponent 0.
  LaurentPoly canonical_unit() const;
  /// Inverse of a unit; throws if not a unit.
  LaurentPoly unit_inverse() const;
  /// Monic, lowest exponent 0 (canonical associate). Zero stays zero.
  LaurentPoly normalized() const;

  /// Specialization t := 1.
  BigRational evaluate_at_one() const;

  std::string to_string() const;

 private:
  void add_term(int e, const BigRational& c);
  std::map<int, BigRational> coeffs_;
};

/// gcd up to units, returned in normalized form (monic, lowest exponent 0).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace strathom

#endif
