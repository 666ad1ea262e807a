#pragma once

#include <optional>
#include <span>

#include "gop/exactalg/factorize.hpp"
#include "gop/exactalg/prime_log.hpp"
#include "gop/exactalg/rational_function.hpp"

namespace gop {

// v with |f|_{p,Gauss} = p^-v: the minimum p-adic valuation of the numerator
// coefficients minus that of the denominator coefficients. nullopt encodes
// the infinite valuation of f = 0.
std::optional<long> gauss_valuation(const Polynomial& f, const BigInt& p);
std::optional<long> gauss_valuation(const RationalFunction& f, const BigInt& p);

// log+ |f|_{p,Gauss} = max(0, -v) as an exponent of log p (0 for f = 0).
long log_plus_exponent(const RationalFunction& f, const BigInt& p);

// Smallest positive integer q with q * c integral for every coefficient c of
// every entry. Entries must be polynomials.
BigInt common_denominator(std::span<const Polynomial> entries);
BigInt common_denominator(std::span<const RationalFunction> entries);

// Every prime dividing a coefficient denominator of a numerator
// (denominators are primitive, so these are the primes where |f| > 1).
std::vector<BigInt> denominator_primes(std::span<const RationalFunction> entries,
                                       const FactorizationOptions& options = {});

}  // namespace gop
