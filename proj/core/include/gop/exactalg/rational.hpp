#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gop {

using BigInt = mpz_class;
// mpq_class keeps gcd(num, den) = 1 and den > 0 after every operation.
using BigRational = mpq_class;

// Parses "p", "-p" or "p/q"; throws DomainError on malformed text or q = 0.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& n);
std::string to_string(const BigRational& q);

BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

// Multiplicity of the prime p in |n| (n != 0).
long valuation(const BigInt& n, const BigInt& p);
// v_p(q) for q != 0; may be negative.
long valuation(const BigRational& q, const BigInt& p);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt lcm_range(unsigned long n);  // lcm(1, ..., n), 1 for n = 0

// True if q is an integer <= 0.
bool is_nonpositive_integer(const BigRational& q);

}  // namespace gop
