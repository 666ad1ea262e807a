#include "gop/exactalg/prime_log.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "gop/errors.hpp"

namespace gop {

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

mpfr_prec_t precision_for(int digits) { return static_cast<mpfr_prec_t>(digits * 3.33 + 64); }

void accumulate(mpfr_ptr acc, const PrimeLogCombination::Terms& terms, mpfr_prec_t prec) {
  MpfrValue term(prec);
  for (const auto& [p, e] : terms) {
    mpfr_set_z(term.get(), p.get_mpz_t(), MPFR_RNDN);
    mpfr_log(term.get(), term.get(), MPFR_RNDN);
    mpfr_mul_si(term.get(), term.get(), e, MPFR_RNDN);
    mpfr_add(acc, acc, term.get(), MPFR_RNDN);
  }
}

std::string render(mpfr_ptr v, int digits) {
  if (mpfr_zero_p(v)) return "0";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v);
  return std::string(buf.data());
}

}  // namespace

PrimeLogCombination::PrimeLogCombination(Terms terms) : terms_(std::move(terms)) { drop_zeros(); }

PrimeLogCombination PrimeLogCombination::single(const BigInt& p, long e) {
  Terms t;
  if (e != 0) t.emplace(p, e);
  return PrimeLogCombination(std::move(t));
}

void PrimeLogCombination::drop_zeros() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

long PrimeLogCombination::exponent(const BigInt& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

BigInt PrimeLogCombination::to_integer() const {
  BigInt r = 1;
  for (const auto& [p, e] : terms_) {
    if (e < 0) throw DomainError("prime-log combination has a negative exponent");
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    r *= pe;
  }
  return r;
}

std::string PrimeLogCombination::to_decimal(int digits) const { return to_decimal_scaled(1, digits); }

std::string PrimeLogCombination::to_decimal_scaled(long s, int digits) const {
  if (s <= 0) throw DomainError("scale must be positive");
  const mpfr_prec_t prec = precision_for(digits);
  MpfrValue acc(prec);
  accumulate(acc.get(), terms_, prec);
  mpfr_div_si(acc.get(), acc.get(), s, MPFR_RNDN);
  return render(acc.get(), digits);
}

double PrimeLogCombination::value() const {
  MpfrValue acc(128);
  accumulate(acc.get(), terms_, 128);
  return mpfr_get_d(acc.get(), MPFR_RNDN);
}

PrimeLogCombination& PrimeLogCombination::operator+=(const PrimeLogCombination& o) {
  for (const auto& [p, e] : o.terms_) terms_[p] += e;
  drop_zeros();
  return *this;
}

PrimeLogCombination& PrimeLogCombination::operator-=(const PrimeLogCombination& o) {
  for (const auto& [p, e] : o.terms_) terms_[p] -= e;
  drop_zeros();
  return *this;
}

PrimeLogCombination PrimeLogCombination::operator-() const {
  PrimeLogCombination out = *this;
  for (auto& [p, e] : out.terms_) e = -e;
  return out;
}

PrimeLogCombination PrimeLogCombination::prime_max(const PrimeLogCombination& a, const PrimeLogCombination& b) {
  Terms t = a.terms_;
  for (const auto& [p, e] : b.terms_) {
    auto [it, inserted] = t.emplace(p, e);
    if (!inserted) it->second = std::max(it->second, e);
  }
  // Primes present only in `a` compare against an implicit zero in `b`.
  for (auto& [p, e] : t) {
    if (!b.terms_.count(p) && e < 0) e = 0;
    if (!a.terms_.count(p) && e < 0) e = 0;
  }
  return PrimeLogCombination(std::move(t));
}

std::string PrimeLogCombination::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [p, e] : terms_) {
    if (!first) os << ", ";
    first = false;
    os << p.get_str() << ":" << e;
  }
  os << "}";
  return os.str();
}

std::string format_decimal(double value, int digits) {
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::string(buf);
}

}  // namespace gop
