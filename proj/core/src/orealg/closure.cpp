#include "gop/orealg/closure.hpp"

#include "gop/errors.hpp"
#include "gop/exactalg/linear_dependence.hpp"

namespace gop {

namespace {

// Coefficient vector (length n) of an operator of order < n.
std::vector<RationalFunction> as_vector(const OreOperator& r, std::size_t n) {
  std::vector<RationalFunction> v(n);
  for (std::size_t i = 0; i < r.coefficients().size(); ++i) v[i] = r.coefficients()[i];
  return v;
}

// Builds the operator from the first dependence among the Krylov vectors
// produced by `next` (vector k is the image of D^k).
template <class Next>
OreOperator first_dependence(std::vector<RationalFunction> start, std::size_t bound, Next&& next) {
  const std::size_t dim = start.size();
  std::vector<std::vector<RationalFunction>> krylov{std::move(start)};
  for (std::size_t k = 0; k <= bound; ++k) {
    RfMatrix cols(dim, krylov.size());
    for (std::size_t j = 0; j < krylov.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) cols(i, j) = krylov[j][i];
    if (auto c = kernel_vector(cols)) return OreOperator(std::move(*c));
    krylov.push_back(next(krylov.back()));
  }
  throw DomainError("no linear dependence found within the dimension bound");
}

}  // namespace

DiffSystem companion_matrix(const OreOperator& l) {
  if (l.order() < 1) throw DomainError("companion matrix needs an operator of order >= 1");
  const auto n = static_cast<std::size_t>(l.order());
  OreOperator m = l.monic();
  RfMatrix a(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = RationalFunction(1);
  for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = -m.coeff(j);
  return DiffSystem(std::move(a));
}

OreOperator lclm(const OreOperator& l1, const OreOperator& l2) {
  if (l1.is_zero() || l2.is_zero()) throw DomainError("lclm of the zero operator");
  if (l1.order() == 0) return l2.monic();
  if (l2.order() == 0) return l1.monic();
  const auto n1 = static_cast<std::size_t>(l1.order());
  const auto n2 = static_cast<std::size_t>(l2.order());
  // Track D^k mod L1 and D^k mod L2 side by side.
  std::vector<RationalFunction> start(n1 + n2);
  start[0] = RationalFunction(1);
  start[n1] = RationalFunction(1);
  auto split = [&](const std::vector<RationalFunction>& v) {
    return std::pair{OreOperator(std::vector<RationalFunction>(v.begin(), v.begin() + static_cast<long>(n1))),
                     OreOperator(std::vector<RationalFunction>(v.begin() + static_cast<long>(n1), v.end()))};
  };
  auto next = [&](const std::vector<RationalFunction>& v) {
    auto [r1, r2] = split(v);
    auto a = as_vector(right_remainder(r1.derive_left(), l1), n1);
    auto b = as_vector(right_remainder(r2.derive_left(), l2), n2);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  return first_dependence(std::move(start), n1 + n2, next);
}

OreOperator symmetric_product(const OreOperator& l1, const OreOperator& l2) {
  if (l1.is_zero() || l2.is_zero()) throw DomainError("symmetric product of the zero operator");
  if (l1.order() == 0 || l2.order() == 0) return OreOperator(1);
  const auto n1 = static_cast<std::size_t>(l1.order());
  const auto n2 = static_cast<std::size_t>(l2.order());
  const OreOperator m1 = l1.monic();
  const OreOperator m2 = l2.monic();
  auto idx = [n2](std::size_t i, std::size_t j) { return i * n2 + j; };
  std::vector<RationalFunction> start(n1 * n2);
  start[idx(0, 0)] = RationalFunction(1);
  // d/dz of sum w_ij D^i(y1) D^j(y2), with D^n1 y1 and D^n2 y2 rewritten on
  // lower derivatives.
  auto next = [&](const std::vector<RationalFunction>& w) {
    std::vector<RationalFunction> out(w.size());
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) {
        const RationalFunction& c = w[idx(i, j)];
        if (c.is_zero()) continue;
        out[idx(i, j)] += c.derivative();
        if (i + 1 < n1) {
          out[idx(i + 1, j)] += c;
        } else {
          for (std::size_t k = 0; k < n1; ++k)
            if (!m1.coeff(k).is_zero()) out[idx(k, j)] -= c * m1.coeff(k);
        }
        if (j + 1 < n2) {
          out[idx(i, j + 1)] += c;
        } else {
          for (std::size_t k = 0; k < n2; ++k)
            if (!m2.coeff(k).is_zero()) out[idx(i, k)] -= c * m2.coeff(k);
        }
      }
    return out;
  };
  return first_dependence(std::move(start), n1 * n2, next);
}

}  // namespace gop
