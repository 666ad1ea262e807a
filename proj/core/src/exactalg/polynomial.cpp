#include "gop/exactalg/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "gop/errors.hpp"

namespace gop {

namespace {

using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  BigInt g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    BigInt la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

ZPoly to_primitive_integer(const Polynomial& p) {
  Polynomial pp = p.primitive_part();
  ZPoly out;
  out.reserve(pp.size());
  for (const auto& c : pp.coefficients()) out.emplace_back(c.get_num());
  make_primitive(out);
  return out;
}

Polynomial from_integer(const ZPoly& p) {
  std::vector<BigRational> c;
  c.reserve(p.size());
  for (const auto& x : p) c.emplace_back(x);
  return Polynomial(std::move(c));
}

ZPoly primitive_gcd(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    if (b.size() == 1) return ZPoly{1};
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const BigRational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Polynomial Polynomial::monomial(const BigRational& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<BigRational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Polynomial::is_monomial() const {
  if (coeffs_.empty()) return false;
  return z_valuation() + 1 == coeffs_.size();
}

BigRational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

std::size_t Polynomial::z_valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return 0;
}

Polynomial Polynomial::shift_down(std::size_t k) const {
  if (k == 0 || coeffs_.empty()) return *this;
  if (k > z_valuation()) throw DomainError("polynomial is not divisible by the requested power of z");
  return Polynomial(std::vector<BigRational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Polynomial Polynomial::shift_up(std::size_t k) const {
  if (k == 0 || coeffs_.empty()) return *this;
  std::vector<BigRational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

BigRational Polynomial::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::taylor_shift(const BigRational& c) const {
  if (c == 0 || coeffs_.size() <= 1) return *this;
  // Horner in the ring Q[X]: acc = acc * (X + c) + a_i.
  std::vector<BigRational> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc.emplace_back(0);
    for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] = acc[i - 1] + c * acc[i];
    acc[0] = c * acc[0] + *it;
  }
  return Polynomial(std::move(acc));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

BigRational Polynomial::content() const {
  if (coeffs_.empty()) return 0;
  BigInt num = 0;
  BigInt den = 1;
  for (const auto& c : coeffs_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

Polynomial Polynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  BigRational c = content();
  if (c == 1) return *this;
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x /= c;
  return out;
}

BigInt Polynomial::denominator_lcm() const {
  BigInt den = 1;
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  return den;
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.get_den() == 1; });
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigRational& c = coeffs_[k];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<BigRational> r = a.coefficients();
  std::vector<BigRational> q(r.size() - b.size() + 1);
  const auto& bc = b.coefficients();
  const BigRational inv = 1 / b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    BigRational f = r[k + bc.size() - 1] * inv;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t i = 0; i < bc.size(); ++i) r[k + i] -= f * bc[i];
  }
  r.resize(bc.size() - 1);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return from_integer(to_primitive_integer(b));
  if (b.is_zero()) return from_integer(to_primitive_integer(a));
  const std::size_t v = std::min(a.z_valuation(), b.z_valuation());
  Polynomial ra = a.shift_down(a.z_valuation());
  Polynomial rb = b.shift_down(b.z_valuation());
  Polynomial core;
  if (ra.is_constant() || rb.is_constant()) {
    core = Polynomial(1);
  } else {
    core = from_integer(primitive_gcd(to_primitive_integer(ra), to_primitive_integer(rb)));
  }
  return core.shift_up(v);
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial g = gcd(a, b);
  Polynomial l = exact_divide(a.primitive_part() * b.primitive_part(), g);
  Polynomial out = l.primitive_part();
  if (out.leading() < 0) out = -out;
  return out;
}

}  // namespace gop
