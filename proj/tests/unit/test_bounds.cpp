#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "gop/bounds/calculators.hpp"
#include "gop/bounds/pipeline.hpp"
#include "gop/errors.hpp"
#include "gop/orealg/catalog.hpp"
#include "gop/orealg/series.hpp"

using namespace gop;
using namespace gop::bounds;

namespace {

const double kLog2 = std::log(2.0);

double value(const std::string& id, const std::vector<std::pair<std::string, double>>& in,
             const std::vector<double>& list = {}) {
  return evaluate(id, in, list).value;
}

}  // namespace

TEST_CASE("main theorem bound") {
  std::vector<MainTheoremTerm> t1{{2, 0, 2.0}};
  CHECK(main_theorem_bound(t1) == doctest::Approx(2 * (1 + kLog2)));
  CHECK(main_theorem_bound(t1) == doctest::Approx(3.3863).epsilon(1e-4));
  std::vector<MainTheoremTerm> t2{{1, 0, 0.0}};
  CHECK(main_theorem_bound(t2) == doctest::Approx(1 + kLog2));
  CHECK_THROWS_AS(main_theorem_bound({}), DomainError);

  std::mt19937 rng(51);
  for (int i = 0; i < 50; ++i) {
    std::vector<MainTheoremTerm> terms{{rng() % 9 + 1, static_cast<long>(rng() % 4), (rng() % 100) / 10.0}};
    const double before = main_theorem_bound(terms);
    terms.push_back({1, terms[0].k + 1 + static_cast<long>(rng() % 3), 0.0});
    CHECK(main_theorem_bound(terms) >= before);
  }
}

TEST_CASE("closure bounds") {
  std::vector<double> s{3, 5};
  CHECK(closure_bound(ClosureKind::sum, s) == 5);
  CHECK(closure_bound(ClosureKind::product, s) == doctest::Approx(8.4657).epsilon(1e-4));
  std::vector<double> seven{7};
  CHECK(closure_bound(ClosureKind::nfold, seven, 1) == 7);
  CHECK(closure_bound(ClosureKind::tensor, s) == doctest::Approx((1 + kLog2) * 5));
  CHECK(closure_bound(ClosureKind::sympower, seven, 3) == doctest::Approx((1 + std::log(3.0)) * 7));
  CHECK(parse_closure_kind("tensor") == ClosureKind::tensor);
  CHECK_THROWS_AS(parse_closure_kind("wedge"), DomainError);
}

TEST_CASE("dual bounds") {
  auto d = dual_bounds(4, 3);
  REQUIRE(d.katz.has_value());
  CHECK(*d.katz == doctest::Approx(6.7726).epsilon(1e-4));
  CHECK(d.additive_lower == 2);
  CHECK(d.additive_upper == 6);
  auto one = dual_bounds(4, 1);
  CHECK_FALSE(one.katz.has_value());
  CHECK(one.additive_lower == 4);
  CHECK(one.additive_upper == 4);
  CHECK(dual_bounds(0, 3).additive_lower == 0);
  CHECK_THROWS_AS(value("dual-katz", {{"sigma", 1}, {"mu", 1}}), DomainError);
}

TEST_CASE("exact sequence bounds") {
  auto a = exact_sequence_bounds(0, 0, 1);
  CHECK(a.doubled == 1);
  CHECK(a.refined == 1);
  CHECK(a.additive == 1);
  CHECK(exact_sequence_bounds(2, 3, 2).additive == 10);

  bool found = false;
  for (int s2 = 0; s2 <= 5 && !found; ++s2)
    for (int s3 = 0; s3 <= 5 && !found; ++s3)
      for (int m3 = 1; m3 <= 5 && !found; ++m3) {
        auto e = exact_sequence_bounds(s2, s3, m3);
        if (e.refined > e.additive) {
          found = true;
          CHECK(e.refined > e.additive);
        }
      }
  CHECK(found);
}

TEST_CASE("product operator bounds") {
  auto a = product_operator_bounds(0, 0, 1);
  CHECK(a.lower == 0);
  CHECK(a.upper_a == 1);
  CHECK(a.upper_b == 1);
  auto b = product_operator_bounds(1, 1, 2);
  CHECK(b.lower == 1);
  CHECK(b.upper_a == doctest::Approx(4.6667).epsilon(1e-4));
  CHECK(b.upper_b == 5);
  CHECK(product_operator_bounds(0, 9.5, 3).upper_b == doctest::Approx(3 + 9.5));
  std::mt19937 rng(52);
  for (int i = 0; i < 200; ++i) {
    auto r = product_operator_bounds((rng() % 100) / 7.0, (rng() % 100) / 7.0, 1 + static_cast<long>(rng() % 5));
    CHECK(r.lower <= std::min(r.upper_a, r.upper_b));
  }
}

TEST_CASE("chudnovsky and comp") {
  CHECK(chudnovsky_bound(2, 2, 1).branch_coefficient == 56);
  CHECK(chudnovsky_bound(2, 2, 1).combined_coefficient == 56);
  auto one = chudnovsky_bound(1, 1, 1);
  CHECK(one.branch_value == 5);
  CHECK(one.combined_value == 11);
  CHECK(chudnovsky_bound(3, 2, 0).branch_value == 0);
  for (long d = 0; d <= 10; ++d) CHECK(chudnovsky_bound(1, d, 1).combined_value >= chudnovsky_bound(1, d, 1).branch_value);

  for (long mu = 1; mu <= 10; ++mu)
    for (long d = 0; d <= 10; ++d) CHECK(comp_function(mu, d) > 0);
  for (long d = 0; d <= 10; ++d)
    CHECK(comp_function(1, d) == doctest::Approx(6 * kLog2 * (d + 1) - 1 - kLog2).epsilon(1e-12));
  CHECK(comp_function(2, 0) == doctest::Approx(18 * (1 + kLog2) - 20));
  for (long mu = 2; mu <= 10; ++mu) CHECK(comp_leading(mu) > 1 + kLog2);
}

TEST_CASE("application bounds") {
  auto a = application_bounds(7, 2, 2, 13);
  CHECK(a.via_chudnovsky == doctest::Approx(1232.6).epsilon(1e-4));
  CHECK(a.via_alternative == doctest::Approx(783.9).epsilon(1e-4));
  CHECK(application_bounds(1, 2, 2, 0).via_chudnovsky == doctest::Approx(1 + kLog2));
  const double big_d = 1e30;
  auto r = application_bounds(static_cast<unsigned long>(1e18), 2, 2, 0.5);
  CHECK(r.via_chudnovsky == doctest::Approx(2 * (1 + kLog2) * std::log(1e18)));
  (void)big_d;
  CHECK(application_bounds(7, 2, 2, 13, 2).via_alternative == doctest::Approx(2 * a.via_alternative));
}

TEST_CASE("nilsson alternative bound") {
  std::vector<unsigned long> d{7};
  CHECK(nilsson_alt_bound(d, 0, 1, 2, 2, 13) == doctest::Approx(application_bounds(7, 2, 2, 13).via_alternative));
  std::vector<unsigned long> one{1};
  CHECK(nilsson_alt_bound(one, 3, 2, 2, 2, 0, 2) == doctest::Approx(6));
  std::vector<unsigned long> pair{4, 6};
  CHECK(nilsson_alt_bound(pair, 0, 1, 1, 0, 0) == doctest::Approx(2 * std::log(12.0)));
  const double base = nilsson_alt_bound(d, 1, 1, 2, 2, 1);
  CHECK(nilsson_alt_bound(d, 2, 1, 2, 2, 1) >= base);
  CHECK(nilsson_alt_bound(d, 1, 2, 2, 2, 1) >= base);
  CHECK(nilsson_alt_bound(d, 1, 1, 3, 2, 1) >= base);
  CHECK(nilsson_alt_bound(d, 1, 1, 2, 3, 1) >= base);
  CHECK(nilsson_alt_bound(d, 1, 1, 2, 2, 2) >= base);
}

TEST_CASE("monotone in sigma") {
  std::mt19937 rng(53);
  for (int i = 0; i < 100; ++i) {
    const double lo = (rng() % 1000) / 37.0, hi = lo + (rng() % 1000) / 41.0;
    std::vector<double> a{lo, 1.0}, b{hi, 1.0};
    CHECK(closure_bound(ClosureKind::product, a) <= closure_bound(ClosureKind::product, b));
    CHECK(dual_bounds(lo, 3).additive_upper <= dual_bounds(hi, 3).additive_upper);
    CHECK(exact_sequence_bounds(lo, 1, 2).refined <= exact_sequence_bounds(hi, 1, 2).refined);
    CHECK(product_operator_bounds(lo, 1, 2).upper_a <= product_operator_bounds(hi, 1, 2).upper_a);
    CHECK(chudnovsky_bound(2, 1, lo).branch_value <= chudnovsky_bound(2, 1, hi).branch_value);
    CHECK(application_bounds(3, 2, 1, lo).via_chudnovsky <= application_bounds(3, 2, 1, hi).via_chudnovsky);
    CHECK(application_bounds(3, 2, 1, lo).via_alternative <= application_bounds(3, 2, 1, hi).via_alternative);
    CHECK(galochkin_size_bounds(lo, -1, 1).upper <= galochkin_size_bounds(hi, -1, 1).upper);
  }
}

TEST_CASE("evaluate by formula id") {
  CHECK(value("eq-4.2", {{"d-beta", 7}, {"mu", 2}, {"delta", 2}, {"sigma-bar", 13}}) ==
        doctest::Approx(1232.6).epsilon(1e-4));
  CHECK(value("eq-4.4", {{"d-beta", 7}, {"mu", 2}, {"delta", 2}, {"sigma-bar", 13}}) ==
        doctest::Approx(783.9).epsilon(1e-4));
  CHECK(value("main-theorem", {}, {2, 0, 2}) == doctest::Approx(2 * (1 + kLog2)));
  CHECK(value("closure-product", {}, {3, 5}) == doctest::Approx((1 + kLog2) * 5));
  CHECK(value("thm-product-upper-a", {{"sigma1", 1}, {"sigma2", 1}, {"ord1", 2}}) == doctest::Approx(1 + 11.0 / 3));
  CHECK(value("exact-sequence-additive", {{"sigma2", 2}, {"sigma3", 3}, {"mu3", 2}}) == 10);
  CHECK(value("galochkin-upper", {{"sigma", 1}, {"h-plus", 0.5}}) == 1.5);
  CHECK(value("comp", {{"mu", 2}, {"delta", 0}}) == doctest::Approx(18 * (1 + kLog2) - 20));
  CHECK_THROWS_AS(value("eq-9.9", {}), DomainError);
  CHECK_THROWS_AS(value("eq-4.2", {{"mu", 2}}), DomainError);
  CHECK_THROWS_AS(value("comp", {{"mu", 1.5}, {"delta", 0}}), DomainError);
  for (const auto& id : formula_ids()) CHECK_FALSE(id.empty());
  auto rep = evaluate("chudnovsky", {{"mu", 1}, {"delta", 1}, {"sigma-bar", 1}});
  CHECK(rep.value == 5);
  CHECK_FALSE(rep.notes.empty());
}

TEST_CASE("pipeline on the hypergeometric example") {
  OreOperator l = hypergeometric_operator(BigRational(1, 3), BigRational(2, 11), BigRational(1, 6));
  LBetaOptions opts;
  opts.s_max = 10;
  auto r = lbeta_pipeline(l, BigRational(1, 7), 13, opts);
  CHECK(r.profile.mu == 2);
  CHECK(r.profile.delta == 2);
  CHECK(r.d_beta == 7);
  CHECK(r.bounds.via_chudnovsky == doctest::Approx(1232.6).epsilon(1e-4));
  CHECK(r.bounds.via_alternative == doctest::Approx(783.9).epsilon(1e-4));
  CHECK(r.verdict == "eq-4.4 sharper");
  CHECK(r.regime == "sigma-bar");
  CHECK(r.z_exponent == 1);
  CHECK(r.z_exponent_defaulted);
  CHECK(r.tilde_bounds.via_alternative == doctest::Approx(r.profile.ell + r.bounds.via_alternative));
  CHECK(r.l_tilde.order() == r.l_beta.order() + r.profile.ell);
  CHECK(r.trajectory.size() == 10);
  CHECK(r.violations.empty());
}

TEST_CASE("pipeline on the geometric operator") {
  LBetaOptions opts;
  opts.s_max = 40;
  auto r = lbeta_pipeline(geometric_operator(), BigRational(1, 2), 0, opts);
  CHECK(r.profile.ell == 1);
  CHECK(r.l_beta == beta_shift(to_theta_form(geometric_operator()).form, BigRational(1, 2)));
  CHECK(r.trajectory.size() == 40);
  MESSAGE("geometric beta = 1/2: bound " << r.best_bound() << ", last estimate " << r.trajectory.back()
                                           << ", violations " << r.violations.size());

  auto one = lbeta_pipeline(geometric_operator(), 1, 0, opts);
  std::vector<BigRational> ones(60, BigRational(1));
  CHECK(apply_to_series(one.l_beta, ones, 1, 50).all_zero());
  CHECK_THROWS_AS(lbeta_pipeline(geometric_operator(), -1, 0, opts), DomainError);
  opts.z_exponent = 3;
  auto e = lbeta_pipeline(geometric_operator(), BigRational(1, 2), 0, opts);
  CHECK_FALSE(e.z_exponent_defaulted);
  CHECK(e.z_exponent == 3);
}
