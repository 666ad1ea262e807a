#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gop/bounds/calculators.hpp"
#include "gop/exactalg/factorize.hpp"
#include "gop/orealg/ore_operator.hpp"
#include "gop/orealg/theta_form.hpp"
#include "gop/sizecalc/galochkin.hpp"

namespace gop::bounds {

struct LBetaOptions {
  std::optional<long> z_exponent;  // e in D^ell z^e L_beta; defaults to mu - 1
  std::size_t s_max = 30;          // length of the empirical Galochkin run, 0 to skip it
  double field_degree = 1.0;
  FactorizationOptions factorization;
};

struct LBetaReport {
  OperatorProfile profile;
  ThetaForm theta;
  BigRational beta;
  unsigned long d_beta = 1;
  double sigma_bar = 0.0;

  OreOperator l_beta;
  long z_exponent = 0;
  bool z_exponent_defaulted = true;
  OreOperator l_tilde;  // D^ell z^e L_beta

  ApplicationBounds bounds;        // on sigma(L_beta)
  ApplicationBounds tilde_bounds;  // ell + each, on sigma(L_tilde)
  ChudnovskyBound chudnovsky;
  double comp = 0.0;
  // Which term of the max in eq-4.2 is active: "constant", "denominator" or "sigma-bar".
  std::string regime;
  // "eq-4.4 sharper", "eq-4.2 sharper" or "equal".
  std::string verdict;

  // Empirical (1/s) log q_s for the companion system of L_beta.
  std::optional<GalochkinReport> galochkin;
  std::vector<double> trajectory;
  // Values of s with (1/s) log q_s above min(eq-4.2, eq-4.4).
  std::vector<std::size_t> violations;

  std::vector<std::string> notes;

  double best_bound() const;
};

// beta must be a nonzero rational outside the negative integers; L must have
// order >= 1.
LBetaReport lbeta_pipeline(const OreOperator& l, const BigRational& beta, double sigma_bar,
                           const LBetaOptions& options = {});

}  // namespace gop::bounds
