#include "gop/orealg/series.hpp"

#include <algorithm>
#include <limits>

#include "gop/errors.hpp"

namespace gop {

namespace {

// Power series of num/den with den(0) != 0.
std::vector<BigRational> series_quotient(const Polynomial& num, const Polynomial& den, std::size_t n) {
  std::vector<BigRational> c(n);
  const BigRational inv0 = 1 / den.coeff(0);
  for (std::size_t m = 0; m < n; ++m) {
    BigRational acc = num.coeff(m);
    const std::size_t top = std::min<std::size_t>(m, den.size() ? den.size() - 1 : 0);
    for (std::size_t i = 1; i <= top; ++i) acc -= den.coefficients()[i] * c[m - i];
    c[m] = acc * inv0;
  }
  return c;
}

// (x)(x-1)...(x-k+1).
BigRational falling(const BigRational& x, std::size_t k) {
  BigRational r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= x - static_cast<long>(i);
  return r;
}

}  // namespace

bool SeriesImage::all_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const BigRational& c) { return c == 0; });
}

std::vector<BigRational> taylor_coefficients(const RationalFunction& f, std::size_t n) {
  if (f.den().coeff(0) == 0) throw DomainError("rational function has a pole at 0");
  return series_quotient(f.num(), f.den(), n);
}

SeriesImage apply_to_series(const OreOperator& l, std::span<const BigRational> a, const BigRational& beta,
                            std::size_t n) {
  if (l.is_zero()) return {beta, std::vector<BigRational>(n)};
  const bool integral_shift = beta.get_den() == 1 && beta >= 0;
  const long b = integral_shift ? beta.get_num().get_si() : 0;

  struct Term {
    std::size_t k;
    long pole;  // a_k = z^-pole * (unit power series)
    const RationalFunction* coeff;
  };
  std::vector<Term> terms;
  for (std::size_t k = 0; k < l.coefficients().size(); ++k) {
    const auto& c = l.coefficients()[k];
    if (!c.is_zero()) terms.push_back({k, c.pole_order_at_zero(), &c});
  }

  // Lowest exponent that can occur, relative to beta. For integer beta >= 0
  // the falling factorial kills z^(n + beta) with n + beta < k.
  long low = std::numeric_limits<long>::max();
  for (const auto& t : terms) {
    const long k = static_cast<long>(t.k);
    low = std::min(low, integral_shift ? -t.pole + std::max(0L, b - k) - b : -k - t.pole);
  }
  SeriesImage out{beta + low, std::vector<BigRational>(n)};

  for (const auto& t : terms) {
    const long k = static_cast<long>(t.k);
    // Contribution of A_m' * c_m * ff_k(m' + beta) lands at index m' + m - k - pole - low.
    const long offset = -k - t.pole - low;  // >= 0 except where ff vanishes
    const long n_max = static_cast<long>(n) - 1 - offset;
    if (n_max < 0) continue;
    if (n_max >= static_cast<long>(a.size())) {
      throw DomainError("series has " + std::to_string(a.size()) + " coefficients, need " + std::to_string(n_max + 1));
    }
    const auto series_len = static_cast<std::size_t>(static_cast<long>(n) + std::max(0L, -offset) + 1);
    const Polynomial num = t.coeff->num().shift_down(t.coeff->num().z_valuation());
    const Polynomial den = t.coeff->den().shift_down(t.coeff->den().z_valuation());
    const auto cs = series_quotient(num, den, series_len);
    for (long m_src = 0; m_src <= n_max; ++m_src) {
      const BigRational ff = falling(beta + m_src, t.k);
      if (ff == 0 || a[static_cast<std::size_t>(m_src)] == 0) continue;
      const BigRational base = ff * a[static_cast<std::size_t>(m_src)];
      for (long m = 0;; ++m) {
        const long idx = m_src + m + offset;
        if (idx >= static_cast<long>(n)) break;
        if (idx < 0) continue;
        out.coeffs[static_cast<std::size_t>(idx)] += base * cs[static_cast<std::size_t>(m)];
      }
    }
  }
  return out;
}

}  // namespace gop
