#pragma once

#include <vector>

#include "gop/orealg/ore_operator.hpp"

namespace gop {

// u * z^shift_base * C * L = sum_j z^j Q_j(theta + j), theta = z D, where C
// is the primitive polynomial clearing the coefficient denominators of L
// (C = 1 when L already has polynomial coefficients) and u is the least
// positive integer making every Q_j integral.
struct ThetaForm {
  BigInt u = 1;
  long shift_base = 0;  // mu - omega
  std::vector<Polynomial> q;
  Polynomial clearing = Polynomial(1);

  // Index of the last Q_j.
  long ell() const { return static_cast<long>(q.size()) - 1; }
  friend bool operator==(const ThetaForm& a, const ThetaForm& b) {
    return a.u == b.u && a.shift_base == b.shift_base && a.q == b.q && a.clearing == b.clearing;
  }
};

struct OperatorProfile {
  long mu = 0;     // order
  long delta = 0;  // z-degree of the cleared operator
  long omega = 0;  // z-adic valuation of z^mu C L in the theta basis
  long ell = 0;    // delta - omega
};

struct ThetaDecomposition {
  ThetaForm form;
  OperatorProfile profile;
};

// Falling factorial X (X - 1) ... (X - k + 1), the theta-polynomial of z^k D^k.
Polynomial falling_factorial(std::size_t k);

ThetaDecomposition to_theta_form(const OreOperator& l);
// sum_j z^j Q_j(theta + j) as an operator in D.
OreOperator theta_sum(const ThetaForm& t);
// Inverse of to_theta_form: theta_sum(t) / (u z^shift_base C). Throws
// DomainError when the z-power does not divide the sum.
OreOperator from_theta_form(const ThetaForm& t);
// Same u, shift and clearing; Q_j(X) replaced by Q_j(X - beta).
ThetaForm shift_theta_form(const ThetaForm& t, const BigRational& beta);
// L_beta = sum_j z^j Q_j(theta + j - beta) = z^beta (sum_j z^j Q_j(theta + j)) z^-beta.
// Negative integers are rejected; beta = 0 gives theta_sum(t).
OreOperator beta_shift(const ThetaForm& t, const BigRational& beta);

}  // namespace gop
