#include "gop/bounds/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "gop/errors.hpp"
#include "gop/orealg/closure.hpp"

namespace gop::bounds {

double LBetaReport::best_bound() const { return std::min(bounds.via_chudnovsky, bounds.via_alternative); }

LBetaReport lbeta_pipeline(const OreOperator& l, const BigRational& beta, double sigma_bar,
                           const LBetaOptions& options) {
  if (l.order() < 1) throw DomainError("the pipeline needs an operator of order >= 1");
  if (is_nonpositive_integer(beta)) throw DomainError("beta must not be zero or a negative integer");
  if (!mpz_fits_ulong_p(beta.get_den().get_mpz_t())) throw DomainError("denominator of beta is too large");

  LBetaReport r;
  ThetaDecomposition dec = to_theta_form(l);
  r.profile = dec.profile;
  r.theta = dec.form;
  r.beta = beta;
  r.d_beta = beta.get_den().get_ui();
  r.sigma_bar = sigma_bar;

  r.l_beta = beta_shift(r.theta, beta);
  r.z_exponent_defaulted = !options.z_exponent.has_value();
  r.z_exponent = options.z_exponent.value_or(r.profile.mu - 1);
  if (r.z_exponent < 0) throw DomainError("z exponent must be >= 0");
  r.l_tilde = OreOperator::derivation(static_cast<std::size_t>(r.profile.ell)) *
              OreOperator(RationalFunction(Polynomial::monomial(1, static_cast<std::size_t>(r.z_exponent)))) *
              r.l_beta;
  if (r.z_exponent_defaulted) r.notes.emplace_back("z exponent of L-tilde defaulted to mu - 1");

  r.bounds = application_bounds(r.d_beta, r.profile.mu, r.profile.delta, sigma_bar, options.field_degree);
  const double ell = static_cast<double>(r.profile.ell);
  r.tilde_bounds = {ell + r.bounds.via_chudnovsky, ell + r.bounds.via_alternative};
  r.chudnovsky = chudnovsky_bound(r.profile.mu, r.profile.delta, sigma_bar);
  r.comp = comp_function(r.profile.mu, r.profile.delta);

  const double terms[3] = {1.0, 2.0 * std::log(static_cast<double>(r.d_beta)),
                           r.chudnovsky.combined_coefficient * sigma_bar};
  const auto active = std::max_element(std::begin(terms), std::end(terms)) - std::begin(terms);
  r.regime = active == 0 ? "constant" : active == 1 ? "denominator" : "sigma-bar";

  const double a = r.bounds.via_chudnovsky;
  const double b = r.bounds.via_alternative;
  if (std::abs(a - b) <= kRelativeTolerance * std::max(a, b))
    r.verdict = "equal";
  else
    r.verdict = b < a ? "eq-4.4 sharper" : "eq-4.2 sharper";
  if (r.profile.mu == 1) r.notes.emplace_back("mu = 1: eq-4.2 uses the combined coefficient 6 delta + 5");
  if (options.field_degree != 1.0) r.notes.emplace_back("field degree only scales eq-4.4");

  if (options.s_max > 0) {
    r.galochkin = galochkin_sequence(companion_matrix(r.l_beta), options.s_max, options.factorization);
    const double bound = r.best_bound();
    for (std::size_t s = 1; s <= r.galochkin->q_log.size(); ++s) {
      const double v = r.galochkin->q_log[s - 1].value() / static_cast<double>(s);
      r.trajectory.push_back(v);
      if (v > bound * (1.0 + kRelativeTolerance)) r.violations.push_back(s);
    }
    if (!r.galochkin->clearing.has_unit_coefficient)
      r.notes.emplace_back("clearing polynomial has no unit coefficient; log q_s only brackets the size");
    if (!r.violations.empty())
      r.notes.emplace_back("empirical trajectory exceeds the bound at some s; the bound constrains only the limsup");
  }
  return r;
}

}  // namespace gop::bounds
