#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gop/diffsystems/diff_system.hpp"
#include "gop/exactalg/factorize.hpp"
#include "gop/exactalg/prime_log.hpp"

namespace gop {

// h(s, p) = sup_{m <= s} log+ ||G_m / m!||_{p,Gauss}, stored as the integer
// multiple of log p, for every prime p where some G_m / m! has Gauss norm > 1.
struct PAdicProfile {
  std::size_t s_max = 0;
  std::vector<BigInt> primes;
  // h[s - 1][p] for s = 1 ... s_max; primes absent from a row have h = 0.
  std::vector<std::map<BigInt, long>> h;

  long h_exponent(std::size_t s, const BigInt& p) const;
  // sum_p h(s, p) log p.
  PrimeLogCombination total(std::size_t s) const;
  // (1/s) sum_p h(s, p): the truncated size trajectory.
  std::vector<double> trajectory() const;
  std::vector<std::string> trajectory_decimal(int digits = 15) const;
};

PAdicProfile padic_size_estimate(const DiffSystem& g, std::size_t s_max, const FactorizationOptions& options = {});
PAdicProfile padic_size_estimate(const IteratedFamily& family, const FactorizationOptions& options = {});

// h+(T) = sum_p log+ |T|_{p,Gauss} and h-(T) = sum_p log min(1, |T|_{p,Gauss}).
struct HeightPair {
  PrimeLogCombination plus;
  PrimeLogCombination minus;
};
HeightPair h_plus_minus(const Polynomial& t, const FactorizationOptions& options = {});

// Size estimates of a power series sum A_m z^m over Q.
struct SeriesSizeReport {
  std::size_t s_max = 0;
  // sum_p sup_{m <= s} log+ |A_m|_p, exact.
  std::vector<PrimeLogCombination> padic;
  // sup_{m <= s} log+ |A_m|.
  std::vector<double> archimedean;

  double padic_part(std::size_t s) const { return padic[s - 1].value() / static_cast<double>(s); }
  double archimedean_part(std::size_t s) const { return archimedean[s - 1] / static_cast<double>(s); }
  // Truncated sigma-bar trajectory: padic_part + archimedean_part.
  std::vector<double> combined() const;
};

SeriesSizeReport series_size_estimate(const std::vector<BigRational>& a, std::size_t s_max,
                                      const FactorizationOptions& options = {});

// log |q| for q != 0, accurate for arbitrarily large numerators/denominators.
double log_abs(const BigRational& q);

}  // namespace gop
