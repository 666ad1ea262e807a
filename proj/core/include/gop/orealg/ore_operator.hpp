#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gop/exactalg/rational_function.hpp"

namespace gop {

// Element of Q(z)[D] with D a = a D + a'. Coefficients are indexed by the
// power of D, lowest first; the leading coefficient is nonzero unless the
// operator is zero.
class OreOperator {
 public:
  OreOperator() = default;
  explicit OreOperator(std::vector<RationalFunction> coeffs);
  OreOperator(const RationalFunction& c);  // NOLINT: scalars embed as order 0
  OreOperator(long c) : OreOperator(RationalFunction(c)) {}  // NOLINT

  // D^k.
  static OreOperator derivation(std::size_t k = 1);
  // z (as an order-0 operator).
  static OreOperator variable();
  // theta = z D.
  static OreOperator theta();

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero operator.
  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<RationalFunction>& coefficients() const { return coeffs_; }
  RationalFunction coeff(std::size_t k) const;
  const RationalFunction& leading() const { return coeffs_.back(); }
  bool is_monic() const;
  OreOperator monic() const;
  // Largest z-degree over the numerators of the coefficients, for operators
  // with polynomial coefficients.
  long z_degree() const;
  bool has_polynomial_coefficients() const;

  OreOperator operator-() const;
  OreOperator& operator+=(const OreOperator& o);
  OreOperator& operator-=(const OreOperator& o);
  friend OreOperator operator+(OreOperator a, const OreOperator& b) { return a += b; }
  friend OreOperator operator-(OreOperator a, const OreOperator& b) { return a -= b; }
  // Composition (noncommutative).
  friend OreOperator operator*(const OreOperator& a, const OreOperator& b);
  friend bool operator==(const OreOperator& a, const OreOperator& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const OreOperator& a, const OreOperator& b) { return !(a == b); }

  // Left multiplication by a scalar rational function.
  OreOperator scaled(const RationalFunction& c) const;
  // D * this, computed coefficientwise.
  OreOperator derive_left() const;
  OreOperator pow(unsigned k) const;

  // Applies the operator to a rational function.
  RationalFunction apply(const RationalFunction& f) const;

  // Text in the expression language, e.g. "(z^2 - z)*D^2 + (2*z - 1)*D + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<RationalFunction> coeffs_;
};

OreOperator ore_mul(const OreOperator& a, const OreOperator& b);

struct DivisionResult {
  OreOperator quotient;
  OreOperator remainder;
};

// L = Q*D + R with ord R < ord D.
DivisionResult right_divide(const OreOperator& l, const OreOperator& d);
// Remainder of L on right division by D.
OreOperator right_remainder(const OreOperator& l, const OreOperator& d);

// Formal adjoint sum_k (-D)^k a_k. For monic L this is the usual
// (-D)^n + sum_{k<n} (-D)^k a_k; the formula is applied without normalizing
// so that L** = L and (L1 L2)* = L2* L1* hold exactly for every L.
OreOperator adjoint(const OreOperator& l);

}  // namespace gop
