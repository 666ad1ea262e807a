#include "gop/orealg/ore_operator.hpp"

#include <sstream>

#include "gop/errors.hpp"

namespace gop {

OreOperator::OreOperator(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

OreOperator::OreOperator(const RationalFunction& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

void OreOperator::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

OreOperator OreOperator::derivation(std::size_t k) {
  std::vector<RationalFunction> c(k + 1);
  c[k] = RationalFunction(1);
  return OreOperator(std::move(c));
}

OreOperator OreOperator::variable() { return OreOperator(RationalFunction::variable()); }

OreOperator OreOperator::theta() { return OreOperator({RationalFunction(), RationalFunction::variable()}); }

RationalFunction OreOperator::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : RationalFunction();
}

bool OreOperator::is_monic() const { return !coeffs_.empty() && coeffs_.back() == RationalFunction(1); }

OreOperator OreOperator::monic() const {
  if (coeffs_.empty()) throw DomainError("monic normalization of the zero operator");
  return scaled(coeffs_.back().inverse());
}

long OreOperator::z_degree() const {
  long d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.num().degree());
  return d;
}

bool OreOperator::has_polynomial_coefficients() const {
  for (const auto& c : coeffs_) {
    if (!c.is_polynomial()) return false;
  }
  return true;
}

OreOperator OreOperator::operator-() const {
  OreOperator out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

OreOperator& OreOperator::operator+=(const OreOperator& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

OreOperator& OreOperator::operator-=(const OreOperator& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

OreOperator OreOperator::scaled(const RationalFunction& c) const {
  if (c.is_zero()) return {};
  OreOperator out = *this;
  for (auto& x : out.coeffs_) x = c * x;
  return out;
}

OreOperator OreOperator::derive_left() const {
  if (coeffs_.empty()) return {};
  // D * sum b_j D^j = sum (b_j' D^j + b_j D^(j+1)).
  std::vector<RationalFunction> out(coeffs_.size() + 1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    out[j] += coeffs_[j].derivative();
    out[j + 1] += coeffs_[j];
  }
  return OreOperator(std::move(out));
}

OreOperator operator*(const OreOperator& a, const OreOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  OreOperator result;
  OreOperator power = b;  // D^i * b
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (i > 0) power = power.derive_left();
    if (!a.coeffs_[i].is_zero()) result += power.scaled(a.coeffs_[i]);
  }
  return result;
}

OreOperator ore_mul(const OreOperator& a, const OreOperator& b) { return a * b; }

OreOperator OreOperator::pow(unsigned k) const {
  OreOperator r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

RationalFunction OreOperator::apply(const RationalFunction& f) const {
  RationalFunction acc;
  RationalFunction d = f;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) d = d.derivative();
    if (!coeffs_[k].is_zero()) acc += coeffs_[k] * d;
  }
  return acc;
}

std::string OreOperator::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const RationalFunction& c = coeffs_[k];
    if (c.is_zero()) continue;
    const std::string dpart = k == 0 ? "" : (k == 1 ? "D" : "D^" + std::to_string(k));
    if (c.is_constant()) {
      const BigRational v = c.constant_value();
      const BigRational m = abs(v);
      if (first)
        os << (v < 0 ? "-" : "");
      else
        os << (v < 0 ? " - " : " + ");
      if (k == 0)
        os << gop::to_string(m);
      else if (m == 1)
        os << dpart;
      else
        os << gop::to_string(m) << "*" << dpart;
    } else {
      if (!first) os << " + ";
      os << "(" << c.to_string() << ")";
      if (k > 0) os << "*" << dpart;
    }
    first = false;
  }
  return os.str();
}

DivisionResult right_divide(const OreOperator& l, const OreOperator& d) {
  if (d.is_zero()) throw DomainError("right division by the zero operator");
  OreOperator q;
  OreOperator r = l;
  const long n = d.order();
  const RationalFunction inv_lead = d.leading().inverse();
  while (!r.is_zero() && r.order() >= n) {
    const auto shift = static_cast<std::size_t>(r.order() - n);
    RationalFunction c = r.leading() * inv_lead;
    std::vector<RationalFunction> term(shift + 1);
    term[shift] = c;
    OreOperator t(std::move(term));
    q += t;
    // Leading terms cancel exactly, so ord r strictly decreases.
    r -= t * d;
  }
  return {std::move(q), std::move(r)};
}

OreOperator right_remainder(const OreOperator& l, const OreOperator& d) { return right_divide(l, d).remainder; }

OreOperator adjoint(const OreOperator& l) {
  if (l.is_zero()) throw DomainError("adjoint of the zero operator");
  OreOperator result;
  OreOperator minus_d = -OreOperator::derivation(1);
  OreOperator power(1);  // (-D)^k
  for (std::size_t k = 0; k < l.coefficients().size(); ++k) {
    if (k > 0) power = power * minus_d;
    const RationalFunction& a = l.coefficients()[k];
    if (!a.is_zero()) result += power * OreOperator(a);
  }
  return result;
}

}  // namespace gop
