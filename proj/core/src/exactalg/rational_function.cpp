#include "gop/exactalg/rational_function.hpp"

#include "gop/errors.hpp"

namespace gop {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_divide(num, g);
      den = exact_divide(den, g);
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
  normalize_denominator();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Canonical)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  normalize_denominator();
}

RationalFunction RationalFunction::reduce_over(Polynomial num, Polynomial den, const Polynomial& base) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction();
  while (!den.is_constant()) {
    Polynomial g = gcd(num, base);
    if (g.is_constant()) break;
    g = gcd(g, den);
    if (g.is_constant()) break;
    num = exact_divide(num, g);
    den = exact_divide(den, g);
  }
  return RationalFunction(std::move(num), std::move(den), Canonical{});
}

void RationalFunction::normalize_denominator() {
  BigRational c = den_.content();
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    den_ *= BigRational(1 / c);
    num_ *= BigRational(1 / c);
  }
}

BigRational RationalFunction::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant");
  return num_.coeff(0) / den_.coeff(0);
}

long RationalFunction::pole_order_at_zero() const {
  if (num_.is_zero()) return 0;
  return static_cast<long>(den_.z_valuation()) - static_cast<long>(num_.z_valuation());
}

RationalFunction RationalFunction::derivative() const {
  if (num_.is_zero()) return {};
  if (den_.is_constant()) return RationalFunction(num_.derivative(), den_, Canonical{});
  // With g = gcd(d, d'), d = g*d1, d' = g*e, the quotient (n'*d1 - n*e)/(d1*d)
  // is already reduced when gcd(n, d) = 1.
  Polynomial dd = den_.derivative();
  Polynomial g = gcd(den_, dd);
  Polynomial d1 = exact_divide(den_, g);
  Polynomial e = exact_divide(dd, g);
  return RationalFunction(num_.derivative() * d1 - num_ * e, d1 * den_, Canonical{});
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw DomainError("inverse of the zero rational function");
  return RationalFunction(den_, num_, Canonical{});
}

RationalFunction RationalFunction::pow(unsigned k) const {
  return RationalFunction(num_.pow(k), den_.pow(k), Canonical{});
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    Polynomial n = num_ + o.num_;
    if (den_.is_constant()) {
      num_ = std::move(n);
      if (num_.is_zero()) den_ = Polynomial(1);
      return *this;
    }
    return *this = RationalFunction(std::move(n), den_);
  }
  Polynomial g = gcd(den_, o.den_);
  Polynomial a = exact_divide(o.den_, g);
  Polynomial b = exact_divide(den_, g);
  Polynomial n = num_ * a + o.num_ * b;
  if (n.is_zero()) return *this = RationalFunction();
  Polynomial d = den_ * a;
  if (g.is_constant()) return *this = RationalFunction(std::move(n), std::move(d), Canonical{});
  // Only factors of g can cancel.
  Polynomial h = gcd(n, g);
  if (!h.is_constant()) {
    n = exact_divide(n, h);
    d = exact_divide(d, h);
  }
  return *this = RationalFunction(std::move(n), std::move(d), Canonical{});
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (num_.is_zero() || o.num_.is_zero()) return *this = RationalFunction();
  Polynomial a = num_;
  Polynomial b = den_;
  Polynomial c = o.num_;
  Polynomial d = o.den_;
  if (!d.is_constant() && !a.is_constant()) {
    Polynomial g = gcd(a, d);
    if (!g.is_constant()) {
      a = exact_divide(a, g);
      d = exact_divide(d, g);
    }
  }
  if (!b.is_constant() && !c.is_constant()) {
    Polynomial g = gcd(c, b);
    if (!g.is_constant()) {
      c = exact_divide(c, g);
      b = exact_divide(b, g);
    }
  }
  return *this = RationalFunction(a * c, b * d, Canonical{});
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == Polynomial(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace gop
