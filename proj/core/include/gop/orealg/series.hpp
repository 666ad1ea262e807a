#pragma once

#include <span>
#include <vector>

#include "gop/orealg/ore_operator.hpp"

namespace gop {

// L applied to a truncated series sum_n A_n z^(n + beta): coefficient k of
// `coeffs` multiplies z^(leading_exponent + k).
struct SeriesImage {
  BigRational leading_exponent;
  std::vector<BigRational> coeffs;

  bool all_zero() const;
};

// The first n coefficients of L(sum A_k z^(k + beta)), exact. Coefficients of
// L are expanded at 0 as Laurent series. Throws DomainError when `a` is too
// short to determine n coefficients.
SeriesImage apply_to_series(const OreOperator& l, std::span<const BigRational> a, const BigRational& beta,
                            std::size_t n);

// First n Taylor coefficients of f at 0 (f must be regular at 0).
std::vector<BigRational> taylor_coefficients(const RationalFunction& f, std::size_t n);

}  // namespace gop
