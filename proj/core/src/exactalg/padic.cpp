#include "gop/exactalg/padic.hpp"

#include <algorithm>
#include <set>

#include "gop/errors.hpp"

namespace gop {

std::optional<long> gauss_valuation(const Polynomial& f, const BigInt& p) {
  if (f.is_zero()) return std::nullopt;
  std::optional<long> best;
  for (const auto& c : f.coefficients()) {
    if (c == 0) continue;
    long v = valuation(c, p);
    if (!best || v < *best) best = v;
  }
  return best;
}

std::optional<long> gauss_valuation(const RationalFunction& f, const BigInt& p) {
  auto vn = gauss_valuation(f.num(), p);
  if (!vn) return std::nullopt;
  return *vn - *gauss_valuation(f.den(), p);
}

long log_plus_exponent(const RationalFunction& f, const BigInt& p) {
  auto v = gauss_valuation(f, p);
  if (!v) return 0;
  return std::max(0L, -*v);
}

BigInt common_denominator(std::span<const Polynomial> entries) {
  BigInt q = 1;
  for (const auto& e : entries) q = lcm(q, e.denominator_lcm());
  return q;
}

BigInt common_denominator(std::span<const RationalFunction> entries) {
  BigInt q = 1;
  for (const auto& e : entries) {
    if (!e.is_polynomial()) throw DomainError("common_denominator expects polynomial entries");
    // A constant denominator is 1 in canonical form.
    q = lcm(q, e.num().denominator_lcm());
  }
  return q;
}

std::vector<BigInt> denominator_primes(std::span<const RationalFunction> entries, const FactorizationOptions& options) {
  std::set<BigInt> primes;
  std::set<BigInt> seen;
  for (const auto& e : entries) {
    for (const auto& c : e.num().coefficients()) {
      BigInt d = c.get_den();
      if (d == 1 || !seen.insert(d).second) continue;
      const PrimeLogCombination f = factorize(d, options);
      for (const auto& [p, k] : f.terms()) primes.insert(p);
    }
  }
  return {primes.begin(), primes.end()};
}

}  // namespace gop
