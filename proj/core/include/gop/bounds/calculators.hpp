#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gop::bounds {

// Size estimates as plain doubles. Results agree with an exact evaluation to
// about 1e-9 relative error.
inline constexpr double kRelativeTolerance = 1e-9;

struct MainTheoremTerm {
  unsigned long d_alpha = 1;  // denominator of the exponent alpha
  long k = 0;                 // power of log z
  double sigma = 0.0;         // size of the minimal operator of the G-function factor
};

// max(1 + log(kappa + 2), 2 (1 + log(kappa + 2)) log max d(alpha),
//     max (1 + log(k + 2)) sigma) with kappa = max k.
double main_theorem_bound(std::span<const MainTheoremTerm> terms);

enum class ClosureKind { sum, product, nfold, tensor, sympower };
ClosureKind parse_closure_kind(const std::string& name);
std::string to_string(ClosureKind kind);

// sum: max sigma_i; product: (1 + log 2) max; nfold/tensor: (1 + log N) max
// over N inputs; sympower: (1 + log N) sigma for the N-th symmetric power.
double closure_bound(ClosureKind kind, std::span<const double> sigmas, unsigned n = 0);

struct DualBounds {
  std::optional<double> katz;  // sigma (1 + log(mu - 1)), needs mu >= 2
  double additive_upper = 0.0;  // sigma + mu - 1
  double additive_lower = 0.0;  // max(0, sigma - mu + 1)
};
DualBounds dual_bounds(double sigma, long mu);

// Bounds on the middle term of 0 -> M2 -> M1 -> M3 -> 0.
struct ExactSequenceBounds {
  double doubled = 0.0;   // 1 + 2 max(sigma2, sigma3 + mu3 - 1)
  double refined = 0.0;   // 1 + (11/6) max(sigma2, sigma3, sigma3*)
  double additive = 0.0;  // mu3 + sigma2 + 2 sigma3
};
// Without sigma3_dual the additive dual estimate sigma3 + mu3 - 1 stands in.
ExactSequenceBounds exact_sequence_bounds(double sigma2, double sigma3, long mu3,
                                          std::optional<double> sigma3_dual = std::nullopt);

struct ProductOperatorBounds {
  double lower = 0.0;    // max(sigma1, sigma2)
  double upper_a = 0.0;  // 1 + (11/6) max(sigma1 + ord1 - 1, sigma2)
  double upper_b = 0.0;  // ord1 + 2 sigma1 + sigma2
};
ProductOperatorBounds product_operator_bounds(double sigma1, double sigma2, long ord1);

// Chudnovsky-type bound on the size of a minimal operator of order mu and
// z-degree delta in terms of sigma-bar of its G-function.
struct ChudnovskyBound {
  double branch_coefficient = 0.0;    // 5 mu^2 (delta+1) - 1 - (mu-1)(delta+1), or 6 delta - 1 at mu = 1
  double combined_coefficient = 0.0;  // (5 + [mu = 1]) mu^2 (delta+1) - 1 - (mu-1)(delta+1)
  double branch_value = 0.0;          // max(0, branch_coefficient * sigma_bar)
  double combined_value = 0.0;
};
ChudnovskyBound chudnovsky_bound(long mu, long delta, double sigma_bar);

// The two bounds on sigma(L_beta) for a G-function with minimal operator of
// order mu and degree delta.
struct ApplicationBounds {
  double via_chudnovsky = 0.0;  // (1 + log 2) max(1, 2 log d(beta), combined coefficient * sigma_bar)
  double via_alternative = 0.0; // [K:Q] (2 log d(beta) + 2 mu (2 mu + 1)(delta + 1) sigma_bar)
};
ApplicationBounds application_bounds(unsigned long d_beta, long mu, long delta, double sigma_bar,
                                     double field_degree = 1.0);

// (1 + log 2) combined_coefficient(mu, delta) - 2 mu (2 mu + 1)(delta + 1).
double comp_function(long mu, long delta);
// (3 + 5 log 2) mu^2 - (3 + log 2) mu + 1 + log 2.
double comp_leading(long mu);

// [K:Q] (2 log d(alpha) + kappa + 2 mu (2 mu lambda (kappa + 1) + 1)(delta + 1) sigma_bar_max),
// d(alpha) the lcm of the given denominators.
double nilsson_alt_bound(std::span<const unsigned long> d_alphas, long kappa, long lambda, long mu, long delta,
                         double sigma_bar_max, double field_degree = 1.0);

// sigma(G) + h-(T)/[K:Q] <= limsup (1/s) log q_s <= [K:Q] sigma(G) + h+(T).
struct GalochkinSizeBounds {
  double lower = 0.0;
  double upper = 0.0;
};
GalochkinSizeBounds galochkin_size_bounds(double sigma, double h_minus, double h_plus, double field_degree = 1.0);

// Generic report for the CLI and JSON output.
struct BoundReport {
  std::string formula_id;
  std::vector<std::pair<std::string, double>> inputs;
  double value = 0.0;
  std::vector<std::pair<std::string, double>> extra;  // secondary values of the same formula
  std::vector<std::string> notes;
};

// Stable formula identifiers understood by evaluate().
std::vector<std::string> formula_ids();
// Evaluates a formula from named numeric inputs (missing inputs take their
// documented defaults). Throws gop::DomainError for unknown ids or invalid
// inputs.
BoundReport evaluate(const std::string& formula_id, const std::vector<std::pair<std::string, double>>& inputs,
                     const std::vector<double>& list_input = {});

}  // namespace gop::bounds
