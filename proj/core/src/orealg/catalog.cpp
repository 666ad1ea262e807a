#include "gop/orealg/catalog.hpp"

#include "gop/errors.hpp"

namespace gop {

namespace {

RationalFunction poly(std::vector<BigRational> c) { return RationalFunction(Polynomial(std::move(c))); }

void expect_params(const std::string& name, std::span<const BigRational> params, std::size_t count) {
  if (params.size() != count) {
    throw DomainError("catalog entry '" + name + "' takes " + std::to_string(count) + " parameter(s), got " +
                      std::to_string(params.size()));
  }
}

}  // namespace

OreOperator geometric_operator() { return OreOperator({RationalFunction(-1), poly({1, -1})}); }

OreOperator log_operator() { return OreOperator({RationalFunction(), RationalFunction(1), RationalFunction::variable()}); }

OreOperator power_operator(const BigRational& alpha) {
  return OreOperator({RationalFunction(Polynomial(-alpha), Polynomial::variable()), RationalFunction(1)});
}

OreOperator hypergeometric_operator(const BigRational& a, const BigRational& b, const BigRational& c) {
  return OreOperator({RationalFunction(BigRational(a * b)), poly({-c, a + b + 1}), poly({0, -1, 1})});
}

OreOperator derivation_power(std::size_t ell) { return OreOperator::derivation(ell); }

OreOperator catalog(const std::string& name, std::span<const BigRational> params) {
  if (name == "geometric") {
    expect_params(name, params, 0);
    return geometric_operator();
  }
  if (name == "log") {
    expect_params(name, params, 0);
    return log_operator();
  }
  if (name == "power") {
    expect_params(name, params, 1);
    return power_operator(params[0]);
  }
  if (name == "hypergeometric") {
    expect_params(name, params, 3);
    return hypergeometric_operator(params[0], params[1], params[2]);
  }
  if (name == "derivation_power") {
    expect_params(name, params, 1);
    if (params[0].get_den() != 1 || params[0] < 0) throw DomainError("derivation_power needs a nonnegative integer");
    return derivation_power(params[0].get_num().get_ui());
  }
  throw DomainError("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() { return {"geometric", "log", "power", "hypergeometric", "derivation_power"}; }

std::vector<BigRational> hypergeometric_coefficients(const BigRational& a, const BigRational& b, const BigRational& c,
                                                     std::size_t n) {
  std::vector<BigRational> out;
  out.reserve(n);
  BigRational term = 1;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(term);
    const long kk = static_cast<long>(k);
    BigRational denom = (c + kk) * (kk + 1);
    if (denom == 0) throw DomainError("hypergeometric parameter c is a nonpositive integer");
    term = term * (a + kk) * (b + kk) / denom;
  }
  return out;
}

}  // namespace gop
