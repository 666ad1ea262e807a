#include "doctest.h"

#include <vector>

#include "gop/errors.hpp"
#include "gop/orealg/catalog.hpp"
#include "gop/orealg/closure.hpp"
#include "gop/orealg/ore_operator.hpp"
#include "gop/orealg/series.hpp"
#include "gop/orealg/theta_form.hpp"
#include "random_objects.hpp"

using namespace gop;

namespace {

const Polynomial z = Polynomial::variable();
const OreOperator D = OreOperator::derivation();
const OreOperator Z = OreOperator::variable();

BigRational q(long n, long d = 1) { return BigRational(n, d); }
OreOperator rf(const RationalFunction& f) { return OreOperator(f); }

std::vector<BigRational> sequence(std::size_t n, auto f) {
  std::vector<BigRational> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(f(k));
  return out;
}

BigRational pow2(std::size_t k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return BigRational(r);
}

bool annihilates(const OreOperator& l, const std::vector<BigRational>& a, const BigRational& beta, std::size_t n) {
  return apply_to_series(l, a, beta, n).all_zero();
}

}  // namespace

TEST_CASE("ore multiplication") {
  CHECK(D * Z == Z * D + 1);
  testing::RandomObjects rnd(21);
  OreOperator l = rnd.operator_of_order(2);
  CHECK(OreOperator(1) * l == l);
  CHECK(l * OreOperator(1) == l);

  // (D - 1/(1-z)) (1 - z), checked by acting on rational functions.
  OreOperator a = D - rf(RationalFunction(1, 1 - z));
  OreOperator b = rf(RationalFunction(1 - z));
  OreOperator ab = a * b;
  CHECK(ab.order() == 1);
  CHECK(ab.leading() == RationalFunction(1 - z));
  for (const RationalFunction& f : {RationalFunction(1, 1 - z), RationalFunction(z * z + 3), RationalFunction(z, 2 - z)})
    CHECK(ab.apply(f) == a.apply(b.apply(f)));
  // and on the series of 1/(1-z) to degree 30
  auto ones = sequence(40, [](std::size_t) -> BigRational { return q(1); });
  auto lhs = apply_to_series(ab, ones, 0, 30);
  std::vector<BigRational> mid(ones.size());
  mid[0] = 1;  // (1 - z) / (1 - z) = 1
  auto rhs = apply_to_series(a, mid, 0, 30);
  CHECK(lhs.coeffs == rhs.coeffs);
}

TEST_CASE("ring axioms on random operators") {
  testing::RandomObjects rnd(22);
  for (int i = 0; i < 15; ++i) {
    OreOperator a = rnd.operator_of_order(1 + i % 2), b = rnd.operator_of_order(1), c = rnd.operator_of_order(1 + i % 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).order() == a.order() + b.order());
    CHECK((a * b).leading() == a.leading() * b.leading());
  }
}

TEST_CASE("right division") {
  auto [q1, r1] = right_divide(D * D, D);
  CHECK(q1 == D);
  CHECK(r1.is_zero());
  testing::RandomObjects rnd(23);
  OreOperator d0 = rnd.operator_of_order(2);
  auto [q2, r2] = right_divide(d0, d0);
  CHECK(q2 == OreOperator(1));
  CHECK(r2.is_zero());
  for (int i = 0; i < 10; ++i) {
    OreOperator l = rnd.operator_of_order(4), d = rnd.operator_of_order(2);
    auto [quo, rem] = right_divide(l, d);
    CHECK(quo * d + rem == l);
    CHECK(rem.order() < d.order());
  }
  CHECK_THROWS_AS(right_divide(D, OreOperator()), DomainError);
}

TEST_CASE("adjoint") {
  CHECK(adjoint(D) == -D);
  OreOperator t = D * D + rf(RationalFunction(1, z)) * D;
  CHECK(adjoint(t) == D * D - rf(RationalFunction(1, z)) * D + rf(RationalFunction(1, z * z)));
  testing::RandomObjects rnd(24);
  for (int i = 0; i < 20; ++i) {
    OreOperator a = rnd.operator_of_order(1 + i % 3), b = rnd.operator_of_order(1 + (i + 1) % 3);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
  }
}

TEST_CASE("companion matrix") {
  OreOperator t = D * D + rf(RationalFunction(1, z)) * D;
  DiffSystem ct = companion_matrix(t);
  CHECK(ct.matrix() == RfMatrix{{RationalFunction(0), RationalFunction(1)}, {RationalFunction(0), RationalFunction(-1, z)}});
  CHECK(companion_matrix(geometric_operator()).matrix() == RfMatrix{{RationalFunction(1, 1 - z)}});
  CHECK(companion_matrix(power_operator(q(1, 7))).matrix() == RfMatrix{{RationalFunction(Polynomial(1), 7 * z)}});
  CHECK_THROWS_AS(companion_matrix(OreOperator(3)), DomainError);
}

TEST_CASE("lclm") {
  testing::RandomObjects rnd(25);
  OreOperator l = rnd.operator_of_order(2);
  CHECK(lclm(l, l) == l.monic());

  OreOperator l1 = geometric_operator();
  OreOperator l2 = rf(RationalFunction(1 - 2 * z)) * D - 2;
  OreOperator m = lclm(l1, l2);
  CHECK(m.order() == 2);
  CHECK(right_remainder(m, l1).is_zero());
  CHECK(right_remainder(m, l2).is_zero());
  auto sum = sequence(120, [](std::size_t k) -> BigRational { return 1 + pow2(k); });
  CHECK(annihilates(m, sum, 0, 80));

  OreOperator m2 = lclm(D, D - rf(RationalFunction(1, z)));
  CHECK(m2.order() == 2);
  CHECK(m2.apply(RationalFunction(1)).is_zero());
  CHECK(m2.apply(RationalFunction(z)).is_zero());

  for (int i = 0; i < 5; ++i) {
    OreOperator a = rnd.operator_of_order(1), b = rnd.operator_of_order(2);
    OreOperator c = lclm(a, b);
    CHECK(c.order() <= 3);
    CHECK(right_remainder(c, a).is_zero());
    CHECK(right_remainder(c, b).is_zero());
  }
}

TEST_CASE("symmetric product") {
  OreOperator l1 = geometric_operator();
  OreOperator l2 = rf(RationalFunction(1 - 2 * z)) * D - 2;
  OreOperator s = symmetric_product(l1, l2);
  CHECK(s == D - rf(RationalFunction(1, 1 - z) + RationalFunction(Polynomial(2), 1 - 2 * z)));
  auto product = sequence(120, [](std::size_t k) -> BigRational { return pow2(k + 1) - 1; });
  CHECK(annihilates(s, product, 0, 80));

  testing::RandomObjects rnd(26);
  OreOperator l = rnd.operator_of_order(2);
  CHECK(symmetric_product(l, D) == l.monic());

  CHECK(symmetric_product(power_operator(q(1, 2)), power_operator(q(1, 2))) == D - rf(RationalFunction(1, z)));

  // Solutions 1, log z times 1/(1-z): order 2 and annihilates 1/(1-z).
  OreOperator tl = symmetric_product(log_operator(), geometric_operator());
  CHECK(tl.order() == 2);
  CHECK(tl.apply(RationalFunction(1, 1 - z)).is_zero());
}

TEST_CASE("theta form examples") {
  auto geo = to_theta_form(geometric_operator());
  CHECK(geo.form.u == 1);
  CHECK(geo.form.shift_base == 1);
  REQUIRE(geo.form.q.size() == 2);
  CHECK(geo.form.q[0] == z);
  CHECK(geo.form.q[1] == -z);
  CHECK(geo.profile.ell == 1);
  CHECK(from_theta_form(geo.form) == geometric_operator());

  auto d = to_theta_form(D);
  CHECK(d.form.u == 1);
  CHECK(d.form.q == std::vector<Polynomial>{z});
  CHECK(d.profile.ell == 0);
  CHECK(from_theta_form(d.form) == D);

  ThetaForm bare;
  bare.q = {z};
  bare.shift_base = 1;
  CHECK(from_theta_form(bare) == D);
  ThetaForm sq;
  sq.q = {z * z};
  CHECK(theta_sum(sq) == Z * Z * D * D + Z * D);
  sq.shift_base = 3;
  CHECK_THROWS_AS(from_theta_form(sq), DomainError);

  OreOperator h = hypergeometric_operator(q(1, 3), q(2, 11), q(1, 6));
  auto hd = to_theta_form(h);
  CHECK(hd.profile.mu == 2);
  CHECK(hd.profile.delta == 2);
  CHECK(from_theta_form(hd.form) == h);
  for (const auto& p : hd.form.q) CHECK(p.has_integer_coefficients());
  CHECK(theta_sum(hd.form) == rf(RationalFunction(Polynomial(BigRational(hd.form.u)) * z.pow(hd.form.shift_base))) * h);
}

TEST_CASE("theta form round trips on random operators") {
  testing::RandomObjects rnd(27);
  for (int i = 0; i < 30; ++i) {
    OreOperator l = i % 2 ? rnd.polynomial_operator(1 + i % 3) : rnd.operator_of_order(1 + i % 3, 1, 4);
    auto dec = to_theta_form(l);
    CHECK(from_theta_form(dec.form) == l);
    CHECK(to_theta_form(from_theta_form(dec.form)).form == dec.form);
    CHECK(dec.profile.ell >= 0);
    BigInt content_gcd = 0;
    for (const auto& p : dec.form.q) {
      CHECK(p.has_integer_coefficients());
      for (const auto& c : p.coefficients()) content_gcd = gcd(content_gcd, c.get_num());
    }
    // u is minimal: no prime divides both u and every coefficient.
    CHECK(gcd(content_gcd, dec.form.u) == 1);
  }
}

TEST_CASE("beta shift") {
  auto geo = to_theta_form(geometric_operator());
  OreOperator theta = OreOperator::theta();
  OreOperator lb = beta_shift(geo.form, q(1, 2));
  CHECK(lb == (theta - rf(q(1, 2))) - Z * (theta + rf(q(1, 2))));
  auto ones = sequence(60, [](std::size_t) -> BigRational { return q(1); });
  CHECK(annihilates(lb, ones, q(1, 2), 50));
  CHECK(beta_shift(geo.form, 0) == theta_sum(geo.form));
  CHECK_THROWS_AS(beta_shift(geo.form, -2), DomainError);

  OreOperator lb1 = beta_shift(geo.form, 1);
  CHECK(annihilates(lb1, ones, 1, 50));

  OreOperator h = hypergeometric_operator(q(1, 3), q(2, 11), q(1, 6));
  auto hd = to_theta_form(h);
  auto coeffs = hypergeometric_coefficients(q(1, 3), q(2, 11), q(1, 6), 70);
  CHECK(annihilates(h, coeffs, 0, 60));
  OreOperator hb = beta_shift(hd.form, q(1, 7));
  CHECK(annihilates(hb, coeffs, q(1, 7), 50));

  testing::RandomObjects rnd(28);
  for (int i = 0; i < 10; ++i) {
    auto t = to_theta_form(rnd.polynomial_operator(2)).form;
    BigRational beta = rnd.rational(9);
    CHECK(shift_theta_form(shift_theta_form(t, beta), -beta) == t);
  }
}

TEST_CASE("series application") {
  auto ones = sequence(40, [](std::size_t) -> BigRational { return q(1); });
  CHECK(annihilates(geometric_operator(), ones, 0, 30));
  auto img = apply_to_series(D, ones, 0, 5);
  CHECK(img.leading_exponent == 0);
  CHECK(img.coeffs == std::vector<BigRational>{1, 2, 3, 4, 5});
  // z^(1/3) under D - (1/3)/z.
  std::vector<BigRational> single{1, 0, 0, 0, 0, 0};
  CHECK(annihilates(power_operator(q(1, 3)), single, q(1, 3), 5));
  CHECK_THROWS_AS(apply_to_series(D, std::span<const BigRational>(ones.data(), 3), 0, 10), DomainError);
}

TEST_CASE("catalog") {
  CHECK(catalog("power", std::vector<BigRational>{q(1, 7)}) == D - rf(RationalFunction(Polynomial(1), 7 * z)));
  CHECK(catalog("log", {}) == Z * D * D + D);
  CHECK(catalog("geometric", {}) == rf(RationalFunction(1 - z)) * D - 1);
  OreOperator h = catalog("hypergeometric", std::vector<BigRational>{q(1, 3), q(2, 11), q(1, 6)});
  CHECK(h == rf(RationalFunction(z * z - z)) * D * D + rf(RationalFunction(q(50, 33) * z - q(1, 6))) * D + rf(q(2, 33)));
  CHECK(catalog("derivation_power", std::vector<BigRational>{3}) == D * D * D);
  CHECK_THROWS_AS(catalog("bessel", {}), DomainError);
  CHECK_THROWS_AS(catalog("power", {}), DomainError);
}

TEST_CASE("printing") {
  CHECK(geometric_operator().to_string() == "(-z + 1)*D - 1");
  CHECK(OreOperator().to_string() == "0");
}
