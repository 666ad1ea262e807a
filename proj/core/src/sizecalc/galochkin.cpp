#include "gop/sizecalc/galochkin.hpp"

#include <algorithm>

#include "gop/errors.hpp"
#include "gop/exactalg/padic.hpp"

namespace gop {

ClearingPolynomial choose_clearing_poly(const DiffSystem& g) {
  Polynomial t = denominator_lcm(g);
  bool unit = std::any_of(t.coefficients().begin(), t.coefficients().end(),
                          [](const BigRational& c) { return c == 1 || c == -1; });
  return {std::move(t), unit};
}

std::string GalochkinReport::estimate(std::size_t s, int digits) const {
  if (s == 0 || s > q_log.size()) throw DomainError("estimate index out of range");
  return q_log[s - 1].to_decimal_scaled(static_cast<long>(s), digits);
}

std::vector<std::string> GalochkinReport::trajectory(int digits) const {
  std::vector<std::string> out;
  out.reserve(q_log.size());
  for (std::size_t s = 1; s <= q_log.size(); ++s) out.push_back(estimate(s, digits));
  return out;
}

GalochkinReport galochkin_sequence(const DiffSystem& g, std::size_t s_max, const FactorizationOptions& options) {
  if (s_max < 1) throw DomainError("galochkin_sequence needs s_max >= 1");
  GalochkinReport report;
  report.clearing = choose_clearing_poly(g);
  report.s_max = s_max;
  const ClearedIterates cleared = cleared_iterates(g, report.clearing.t, s_max);
  BigInt q = 1;
  PrimeLogCombination q_log;
  for (std::size_t m = 1; m <= s_max; ++m) {
    BigInt d = common_denominator(cleared.scaled[m].entries());
    q = lcm(q, d);
    q_log = PrimeLogCombination::prime_max(q_log, factorize(d, options));
    report.q.push_back(q);
    report.q_log.push_back(q_log);
  }
  return report;
}

GalochkinReport galochkin_sequence(const IteratedFamily& family, const FactorizationOptions& options) {
  GalochkinReport report;
  report.clearing = choose_clearing_poly(family.base);
  report.s_max = family.s_max();
  const RationalFunction t(report.clearing.t);
  RationalFunction t_power(1);
  BigInt q = 1;
  PrimeLogCombination q_log;
  for (std::size_t m = 1; m <= family.s_max(); ++m) {
    t_power *= t;
    RfMatrix cleared = t_power * family.divided[m];
    BigInt d = common_denominator(cleared.entries());
    q = lcm(q, d);
    q_log = PrimeLogCombination::prime_max(q_log, factorize(d, options));
    report.q.push_back(q);
    report.q_log.push_back(q_log);
  }
  return report;
}

TrajectorySummary summarize(const std::vector<double>& trajectory) {
  TrajectorySummary out;
  if (trajectory.empty()) return out;
  out.last = trajectory.back();
  out.tail_window = std::max<std::size_t>(1, trajectory.size() / 4);
  out.tail_max = *std::max_element(trajectory.end() - static_cast<long>(out.tail_window), trajectory.end());
  return out;
}

}  // namespace gop
