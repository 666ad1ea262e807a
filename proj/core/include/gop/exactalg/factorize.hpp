#pragma once

#include "gop/exactalg/prime_log.hpp"

namespace gop {

struct FactorizationOptions {
  // Cofactors left after trial division may have at most this many bits;
  // larger composites raise ResourceCapError.
  unsigned max_bits = 128;
  unsigned long trial_division_bound = 1000000;
};

// Exact prime factorization of n >= 1 as {p: e_p}: trial division, then
// Brent's variant of Pollard rho with every reported factor primality-checked.
PrimeLogCombination factorize(const BigInt& n, const FactorizationOptions& options = {});

}  // namespace gop
