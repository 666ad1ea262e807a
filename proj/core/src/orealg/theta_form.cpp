#include "gop/orealg/theta_form.hpp"

#include <map>

#include "gop/errors.hpp"

namespace gop {

namespace {

OreOperator theta_polynomial(const Polynomial& p) {
  OreOperator acc;
  const OreOperator theta = OreOperator::theta();
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    acc = acc * theta + OreOperator(RationalFunction(*it));
  }
  return acc;
}

}  // namespace

Polynomial falling_factorial(std::size_t k) {
  Polynomial p(1);
  for (std::size_t i = 0; i < k; ++i) p = p * Polynomial({BigRational(-static_cast<long>(i)), BigRational(1)});
  return p;
}

ThetaDecomposition to_theta_form(const OreOperator& l) {
  if (l.is_zero()) throw DomainError("theta form of the zero operator");
  Polynomial clearing(1);
  for (const auto& c : l.coefficients()) clearing = lcm(clearing, c.den());
  const long mu = l.order();
  // z^mu * (C L) = sum_e z^e R_e(theta), using p_{k,i} z^i D^k = p_{k,i} z^(i-k) ff_k(theta).
  std::map<long, Polynomial> r;
  long delta = -1;
  for (std::size_t k = 0; k < l.coefficients().size(); ++k) {
    const RationalFunction& a = l.coefficients()[k];
    if (a.is_zero()) continue;
    Polynomial p = exact_divide(a.num() * clearing, a.den());
    delta = std::max(delta, p.degree());
    const Polynomial ff = falling_factorial(k);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.coefficients()[i] == 0) continue;
      const long e = static_cast<long>(i) + mu - static_cast<long>(k);
      r[e] += ff * p.coefficients()[i];
    }
  }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  const long omega = r.begin()->first;
  const long top = r.rbegin()->first;

  ThetaForm t;
  t.clearing = clearing;
  t.shift_base = mu - omega;
  t.q.resize(static_cast<std::size_t>(top - omega + 1));
  BigInt u = 1;
  for (const auto& [e, poly] : r) {
    const long j = e - omega;
    // z^e R_e(theta) = z^j Q_j(theta + j) z^omega-shifted, so Q_j(X) = R_e(X - j).
    t.q[static_cast<std::size_t>(j)] = poly.taylor_shift(BigRational(-j));
    u = lcm(u, t.q[static_cast<std::size_t>(j)].denominator_lcm());
  }
  for (auto& qj : t.q) qj *= BigRational(u);
  t.u = u;
  return {std::move(t), OperatorProfile{mu, delta, omega, delta - omega}};
}

OreOperator theta_sum(const ThetaForm& t) {
  OreOperator acc;
  for (std::size_t j = 0; j < t.q.size(); ++j) {
    if (t.q[j].is_zero()) continue;
    OreOperator term = theta_polynomial(t.q[j].taylor_shift(BigRational(static_cast<long>(j))));
    acc += term.scaled(RationalFunction(Polynomial::monomial(1, j)));
  }
  return acc;
}

OreOperator from_theta_form(const ThetaForm& t) {
  if (t.u <= 0) throw DomainError("malformed theta form: u must be positive");
  if (t.clearing.is_zero()) throw DomainError("malformed theta form: zero clearing polynomial");
  OreOperator s = theta_sum(t);
  if (s.is_zero()) throw DomainError("malformed theta form: all Q_j vanish");
  std::vector<RationalFunction> coeffs;
  const BigRational inv_u(1, t.u);
  for (const auto& c : s.coefficients()) {
    // theta_sum has polynomial coefficients.
    Polynomial p = c.num() * inv_u;
    if (t.shift_base > 0) {
      const auto k = static_cast<std::size_t>(t.shift_base);
      if (!p.is_zero() && p.z_valuation() < k) {
        throw DomainError("malformed theta form: z^" + std::to_string(t.shift_base) + " does not divide the sum");
      }
      p = p.shift_down(k);
    } else if (t.shift_base < 0) {
      p = p.shift_up(static_cast<std::size_t>(-t.shift_base));
    }
    coeffs.emplace_back(p, t.clearing);
  }
  return OreOperator(std::move(coeffs));
}

ThetaForm shift_theta_form(const ThetaForm& t, const BigRational& beta) {
  ThetaForm out = t;
  for (auto& qj : out.q) qj = qj.taylor_shift(-beta);
  return out;
}

OreOperator beta_shift(const ThetaForm& t, const BigRational& beta) {
  if (beta != 0 && is_nonpositive_integer(beta)) {
    throw DomainError("beta must not be a negative integer, got " + beta.get_str());
  }
  return theta_sum(shift_theta_form(t, beta));
}

}  // namespace gop
