#pragma once

#include <map>
#include <string>

#include "gop/exactalg/rational.hpp"

namespace gop {

// Exact value sum_p e_p * log p, stored as the exponent map {p: e_p} with
// zero exponents dropped. Converted to decimal only at report time.
class PrimeLogCombination {
 public:
  using Terms = std::map<BigInt, long>;

  PrimeLogCombination() = default;
  explicit PrimeLogCombination(Terms terms);
  // log p^e.
  static PrimeLogCombination single(const BigInt& p, long e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long exponent(const BigInt& p) const;

  // prod p^e_p when every exponent is >= 0; throws DomainError otherwise.
  BigInt to_integer() const;
  // The value rendered with `digits` significant digits.
  std::string to_decimal(int digits = 15) const;
  // (1/s) * value rendered with `digits` significant digits.
  std::string to_decimal_scaled(long s, int digits = 15) const;
  double value() const;

  PrimeLogCombination& operator+=(const PrimeLogCombination& o);
  PrimeLogCombination& operator-=(const PrimeLogCombination& o);
  friend PrimeLogCombination operator+(PrimeLogCombination a, const PrimeLogCombination& b) { return a += b; }
  friend PrimeLogCombination operator-(PrimeLogCombination a, const PrimeLogCombination& b) { return a -= b; }
  PrimeLogCombination operator-() const;
  friend bool operator==(const PrimeLogCombination& a, const PrimeLogCombination& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PrimeLogCombination& a, const PrimeLogCombination& b) { return !(a == b); }

  // Prime-wise maximum of exponents (the log of an lcm when both sides are
  // logs of integers).
  static PrimeLogCombination prime_max(const PrimeLogCombination& a, const PrimeLogCombination& b);

  // "{2:3, 3:1}".
  std::string to_string() const;

 private:
  void drop_zeros();
  Terms terms_;
};

// Decimal rendering shared by the reports: `digits` significant digits,
// exponent notation only outside [1e-5, 1e21).
std::string format_decimal(double value, int digits = 15);

}  // namespace gop
