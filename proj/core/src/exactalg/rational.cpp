#include "gop/exactalg/rational.hpp"

#include "gop/errors.hpp"

namespace gop {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  BigInt p(n, 10);
  BigInt q(std::string(den), 10);
  if (q == 0) throw DomainError("zero denominator in rational literal '" + std::string(text) + "'");
  BigRational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRational& q) { return q.get_str(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw DomainError("valuation of zero");
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const BigRational& q, const BigInt& p) {
  if (q == 0) throw DomainError("valuation of zero");
  return valuation(BigInt(q.get_num()), p) - valuation(BigInt(q.get_den()), p);
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt lcm_range(unsigned long n) {
  BigInt r = 1;
  for (unsigned long k = 2; k <= n; ++k) r = lcm(r, BigInt(k));
  return r;
}

bool is_nonpositive_integer(const BigRational& q) { return q.get_den() == 1 && q <= 0; }

}  // namespace gop
