#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gop/exactalg/rational.hpp"

namespace gop {

// Dense univariate polynomial over Q, lowest degree first. The coefficient
// vector never ends in a zero; the zero polynomial is the empty vector.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coeffs);
  Polynomial(const BigRational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(BigRational(c)) {}  // NOLINT

  static Polynomial monomial(const BigRational& c, std::size_t k);
  static Polynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // True for c*z^k with c != 0.
  bool is_monomial() const;
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  // Coefficient of z^i; zero past the degree.
  BigRational coeff(std::size_t i) const;
  const BigRational& leading() const { return coeffs_.back(); }
  // Largest k with z^k | p; 0 for the zero polynomial.
  std::size_t z_valuation() const;
  // p / z^k, requires k <= z_valuation().
  Polynomial shift_down(std::size_t k) const;
  Polynomial shift_up(std::size_t k) const;

  Polynomial derivative() const;
  BigRational operator()(const BigRational& x) const;
  // p(X + c).
  Polynomial taylor_shift(const BigRational& c) const;
  Polynomial pow(unsigned k) const;

  // Positive rational c with p / c primitive in Z[z]; 0 for the zero polynomial.
  BigRational content() const;
  // p / content(p): integer coefficients with gcd 1, sign of p kept.
  Polynomial primitive_part() const;
  // lcm of the coefficient denominators (1 for the zero polynomial).
  BigInt denominator_lcm() const;
  bool has_integer_coefficients() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  friend Polynomial operator*(const BigRational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(Polynomial a, long c) { return a *= BigRational(c); }
  friend Polynomial operator*(long c, Polynomial a) { return a *= BigRational(c); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Text in the variable `var`, e.g. "3*z^2 - 1/2*z + 1".
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

// Quotient and remainder with deg r < deg b; b != 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// a / b, throwing DomainError if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
// Greatest common divisor normalized to a primitive integer polynomial with
// positive leading coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// Least common multiple in the same normalization as gcd.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

}  // namespace gop
