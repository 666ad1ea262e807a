#include "gop/exactalg/factorize.hpp"

#include <vector>

#include "gop/errors.hpp"

namespace gop {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 1000000;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

// Brent's cycle detection with the map x -> x^2 + c.
BigInt rho_factor(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    constexpr unsigned long kBatch = 128;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          step(y);
          BigInt d = x - y;
          q = q * abs(d);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd(BigInt(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, PrimeLogCombination::Terms& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  BigInt d = rho_factor(n);
  split(d, out);
  split(BigInt(n / d), out);
}

}  // namespace

PrimeLogCombination factorize(const BigInt& n, const FactorizationOptions& options) {
  if (n < 1) throw DomainError("factorize expects a positive integer");
  PrimeLogCombination::Terms terms;
  BigInt rest = n;
  for (unsigned long p : small_primes()) {
    if (p > options.trial_division_bound) break;
    if (rest == 1) break;
    if (BigInt(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      BigInt bp(p);
      terms[bp] = static_cast<long>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), bp.get_mpz_t()));
    }
  }
  if (rest != 1) {
    if (is_probable_prime(rest)) {
      terms[rest] += 1;
    } else {
      if (mpz_sizeinbase(rest.get_mpz_t(), 2) > options.max_bits) {
        throw ResourceCapError("factorization incomplete: composite cofactor of " +
                               std::to_string(mpz_sizeinbase(rest.get_mpz_t(), 2)) + " bits exceeds the " +
                               std::to_string(options.max_bits) + "-bit cap");
      }
      split(rest, terms);
    }
  }
  return PrimeLogCombination(std::move(terms));
}

}  // namespace gop
