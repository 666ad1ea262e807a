#pragma once

#include <string>

#include "gop/exactalg/polynomial.hpp"

namespace gop {

// Element of Q(z) in canonical form: gcd(num, den) = 1 and den is a primitive
// integer polynomial with positive leading coefficient. All rational content
// lives in the numerator, which makes p-adic Gauss norms readable off the
// numerator alone.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const BigRational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  // num / den; den != 0.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }
  // num / den when every common factor of num and den divides `base`
  // (for example den = base^k). Cheaper than the general constructor when
  // base has small degree.
  static RationalFunction reduce_over(Polynomial num, Polynomial den, const Polynomial& base);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return den_.is_constant() && num_.is_constant(); }
  // Constant value; requires is_constant().
  BigRational constant_value() const;

  // Total z-degree deg(num) - deg(den).
  long degree() const { return num_.degree() - den_.degree(); }
  // Order of the pole at z = 0 (negative for a zero at 0); 0 for f = 0.
  long pole_order_at_zero() const;

  RationalFunction derivative() const;
  RationalFunction inverse() const;
  RationalFunction pow(unsigned k) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string(const std::string& var = "z") const;

 private:
  struct Canonical {};
  // Takes num/den already coprime; only fixes the denominator normalization.
  RationalFunction(Polynomial num, Polynomial den, Canonical);
  void normalize_denominator();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace gop
