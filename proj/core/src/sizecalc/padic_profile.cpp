#include "gop/sizecalc/padic_profile.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gop/errors.hpp"
#include "gop/exactalg/padic.hpp"

namespace gop {

long PAdicProfile::h_exponent(std::size_t s, const BigInt& p) const {
  if (s == 0 || s > h.size()) throw DomainError("profile index out of range");
  auto it = h[s - 1].find(p);
  return it == h[s - 1].end() ? 0 : it->second;
}

PrimeLogCombination PAdicProfile::total(std::size_t s) const {
  if (s == 0 || s > h.size()) throw DomainError("profile index out of range");
  return PrimeLogCombination(PrimeLogCombination::Terms(h[s - 1].begin(), h[s - 1].end()));
}

std::vector<double> PAdicProfile::trajectory() const {
  std::vector<double> out;
  for (std::size_t s = 1; s <= h.size(); ++s) out.push_back(total(s).value() / static_cast<double>(s));
  return out;
}

std::vector<std::string> PAdicProfile::trajectory_decimal(int digits) const {
  std::vector<std::string> out;
  for (std::size_t s = 1; s <= h.size(); ++s) out.push_back(total(s).to_decimal_scaled(static_cast<long>(s), digits));
  return out;
}

namespace {

void accumulate(PAdicProfile& profile, std::set<BigInt>& support, std::map<BigInt, long>& current,
                std::span<const RationalFunction> entries, const FactorizationOptions& options) {
  for (const auto& p : denominator_primes(entries, options)) {
    support.insert(p);
    long e = 0;
    for (const auto& entry : entries) e = std::max(e, log_plus_exponent(entry, p));
    if (e > 0) {
      long& slot = current[p];
      slot = std::max(slot, e);
    }
  }
  profile.h.push_back(current);
}

}  // namespace

// G_m / m! = M_m / T^m with T primitive, so both have the Gauss norms of M_m.
PAdicProfile padic_size_estimate(const DiffSystem& g, std::size_t s_max, const FactorizationOptions& options) {
  if (s_max < 1) throw DomainError("padic_size_estimate needs s_max >= 1");
  const ClearedIterates cleared = cleared_iterates(g, denominator_lcm(g), s_max);
  PAdicProfile profile;
  profile.s_max = s_max;
  std::set<BigInt> support;
  std::map<BigInt, long> current;
  for (std::size_t m = 1; m <= s_max; ++m) {
    const auto& mm = cleared.scaled[m].entries();
    const std::vector<RationalFunction> entries(mm.begin(), mm.end());
    accumulate(profile, support, current, entries, options);
  }
  profile.primes.assign(support.begin(), support.end());
  return profile;
}

PAdicProfile padic_size_estimate(const IteratedFamily& family, const FactorizationOptions& options) {
  PAdicProfile profile;
  profile.s_max = family.s_max();
  std::set<BigInt> support;
  std::map<BigInt, long> current;
  for (std::size_t m = 1; m <= family.s_max(); ++m)
    accumulate(profile, support, current, family.divided[m].entries(), options);
  profile.primes.assign(support.begin(), support.end());
  return profile;
}

HeightPair h_plus_minus(const Polynomial& t, const FactorizationOptions& options) {
  if (t.is_zero()) throw DomainError("h+- of the zero polynomial");
  std::set<BigInt> primes;
  for (const auto& c : t.coefficients()) {
    if (c == 0) continue;
    for (const BigInt n : {BigInt(abs(c.get_num())), BigInt(c.get_den())}) {
      const PrimeLogCombination f = factorize(n, options);
      for (const auto& [p, e] : f.terms()) primes.insert(p);
    }
  }
  PrimeLogCombination::Terms plus;
  PrimeLogCombination::Terms minus;
  for (const auto& p : primes) {
    // |T|_p = p^-v.
    const long v = *gauss_valuation(t, p);
    if (v < 0) plus[p] = -v;
    if (v > 0) minus[p] = -v;
  }
  return {PrimeLogCombination(std::move(plus)), PrimeLogCombination(std::move(minus))};
}

std::vector<double> SeriesSizeReport::combined() const {
  std::vector<double> out;
  for (std::size_t s = 1; s <= s_max; ++s) out.push_back(padic_part(s) + archimedean_part(s));
  return out;
}

double log_abs(const BigRational& q) {
  if (q == 0) throw DomainError("log of zero");
  auto log_z = [](const mpz_class& z) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
  };
  return log_z(q.get_num()) - log_z(q.get_den());
}

SeriesSizeReport series_size_estimate(const std::vector<BigRational>& a, std::size_t s_max,
                                      const FactorizationOptions& options) {
  if (s_max < 1) throw DomainError("series_size_estimate needs s_max >= 1");
  if (s_max > a.size()) throw DomainError("s_max exceeds the number of series coefficients");
  SeriesSizeReport report;
  report.s_max = s_max;
  // sup_{m <= s} log+ |A_m|_p = v_p(den A_m) maximized over m: the log of an lcm.
  PrimeLogCombination padic;
  double arch = 0.0;
  for (std::size_t m = 0; m <= s_max && m < a.size(); ++m) {
    if (a[m] != 0) {
      padic = PrimeLogCombination::prime_max(padic, factorize(BigInt(a[m].get_den()), options));
      arch = std::max(arch, log_abs(a[m]));
    }
    if (m >= 1) {
      report.padic.push_back(padic);
      report.archimedean.push_back(arch);
    }
  }
  // s = s_max may reach past the last coefficient; it then uses m < size.
  while (report.padic.size() < s_max) {
    report.padic.push_back(padic);
    report.archimedean.push_back(arch);
  }
  return report;
}

}  // namespace gop
