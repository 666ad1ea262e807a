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

struct ClearingPolynomial {
  // Primitive integer lcm of the entry denominators, positive leading
  // coefficient; T G has polynomial entries.
  Polynomial t;
  // Some coefficient of T is +-1, the hypothesis under which
  // limsup (1/s) log q_s equals the size.
  bool has_unit_coefficient = false;
};

ClearingPolynomial choose_clearing_poly(const DiffSystem& g);

// Least common denominators q_s of the coefficients of T^m G_m / m!,
// 1 <= m <= s, for s = 1 ... s_max.
struct GalochkinReport {
  ClearingPolynomial clearing;
  std::size_t s_max = 0;
  std::vector<BigInt> q;                     // q[s - 1] = q_s
  std::vector<PrimeLogCombination> q_log;    // q_log[s - 1] = log q_s

  // (1/s) log q_s as a decimal string.
  std::string estimate(std::size_t s, int digits = 15) const;
  std::vector<std::string> trajectory(int digits = 15) const;
};

GalochkinReport galochkin_sequence(const DiffSystem& g, std::size_t s_max, const FactorizationOptions& options = {});
GalochkinReport galochkin_sequence(const IteratedFamily& family, const FactorizationOptions& options = {});

// Summary of a truncated trajectory; the limsup itself is never claimed.
struct TrajectorySummary {
  double last = 0.0;
  double tail_max = 0.0;  // max over the last `tail_window` values
  std::size_t tail_window = 0;
};
TrajectorySummary summarize(const std::vector<double>& trajectory);

}  // namespace gop
