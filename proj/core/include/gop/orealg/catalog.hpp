#pragma once

#include <span>
#include <string>
#include <vector>

#include "gop/orealg/ore_operator.hpp"

namespace gop {

// (1 - z) D - 1, annihilating 1/(1 - z).
OreOperator geometric_operator();
// z D^2 + D, annihilating 1 and log z.
OreOperator log_operator();
// D - alpha/z, annihilating z^alpha.
OreOperator power_operator(const BigRational& alpha);
// z (z - 1) D^2 + ((a + b + 1) z - c) D + a b, annihilating 2F1(a, b; c; z).
OreOperator hypergeometric_operator(const BigRational& a, const BigRational& b, const BigRational& c);
// D^ell.
OreOperator derivation_power(std::size_t ell);

// Lookup by name: geometric, log, power(alpha), hypergeometric(a, b, c),
// derivation_power(ell). Throws DomainError for unknown names or a wrong
// parameter count.
OreOperator catalog(const std::string& name, std::span<const BigRational> params);
std::vector<std::string> catalog_names();

// Taylor coefficients of 2F1(a, b; c; z) up to index n - 1 (c not a
// nonpositive integer).
std::vector<BigRational> hypergeometric_coefficients(const BigRational& a, const BigRational& b, const BigRational& c,
                                                     std::size_t n);

}  // namespace gop
