#include "gop/diffsystems/diff_system.hpp"

#include <algorithm>
#include <map>

#include "gop/errors.hpp"

namespace gop {

DiffSystem::DiffSystem(RfMatrix g) : g_(std::move(g)) {
  if (!g_.is_square() || g_.rows() == 0) throw DomainError("a differential system needs a nonempty square matrix");
}

Polynomial denominator_lcm(const DiffSystem& g) {
  Polynomial t(1);
  for (const auto& e : g.matrix().entries()) t = lcm(t, e.den());
  return t;
}

ClearedIterates cleared_iterates(const DiffSystem& g, const Polynomial& t, std::size_t s_max) {
  const std::size_t n = g.dimension();
  Matrix<Polynomial> h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RationalFunction e = RationalFunction(t) * g(i, j);
      if (!e.is_polynomial()) throw DomainError("clearing polynomial does not clear the system");
      h(i, j) = e.num() * (1 / e.den().coeff(0));
    }
  const Polynomial dt = t.derivative();
  ClearedIterates out{t, {}};
  out.scaled.reserve(s_max + 1);
  out.scaled.push_back(Matrix<Polynomial>::identity(n));
  for (std::size_t m = 0; m < s_max; ++m) {
    const Matrix<Polynomial>& cur = out.scaled.back();
    Matrix<Polynomial> next = cur * h;
    const BigRational inv(1, static_cast<unsigned long>(m + 1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Polynomial& e = next(i, j);
        e += t * cur(i, j).derivative();
        if (m > 0) e -= BigRational(static_cast<long>(m)) * (dt * cur(i, j));
        e *= inv;
      }
    out.scaled.push_back(std::move(next));
  }
  return out;
}

IteratedFamily iterated(const DiffSystem& g, std::size_t s_max) {
  IteratedFamily fam{g, {}, {}};
  fam.entries.reserve(s_max + 1);
  fam.divided.reserve(s_max + 1);
  const Polynomial t = denominator_lcm(g);
  const ClearedIterates cleared = cleared_iterates(g, t, s_max);
  const std::size_t n = g.dimension();
  Polynomial t_power(1);
  BigInt fact = 1;
  for (std::size_t m = 0; m <= s_max; ++m) {
    if (m > 0) {
      t_power = t_power * t;
      fact *= static_cast<unsigned long>(m);
    }
    RfMatrix divided(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        divided(i, j) = RationalFunction::reduce_over(cleared.scaled[m](i, j), t_power, t);
    fam.entries.push_back(RationalFunction(BigRational(fact)) * divided);
    fam.divided.push_back(std::move(divided));
  }
  return fam;
}

DiffSystem gauge(const RfMatrix& p, const DiffSystem& g) {
  RfMatrix pinv = inverse(p);
  return DiffSystem(p * g.matrix() * pinv + derivative(p) * pinv);
}

DiffSystem gauge_inverse(const RfMatrix& p, const DiffSystem& g) {
  RfMatrix pinv = inverse(p);
  return DiffSystem(pinv * derivative(p) + pinv * g.matrix() * p);
}

DiffSystem dual(const DiffSystem& g) { return DiffSystem(-g.matrix().transpose()); }

DiffSystem direct_sum(const DiffSystem& a, const DiffSystem& b) {
  return DiffSystem(block_diagonal(a.matrix(), b.matrix()));
}

DiffSystem tensor(const DiffSystem& a, const DiffSystem& b) {
  RfMatrix ia = RfMatrix::identity(a.dimension());
  RfMatrix ib = RfMatrix::identity(b.dimension());
  return DiffSystem(kronecker(a.matrix(), ib) + kronecker(ia, b.matrix()));
}

std::vector<std::vector<std::size_t>> symmetric_basis(std::size_t n, std::size_t power) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(power, 0);
  if (n == 0) return out;
  while (true) {
    out.push_back(cur);
    // Next nondecreasing tuple in lexicographic order.
    std::size_t pos = power;
    while (pos > 0 && cur[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    std::size_t v = cur[pos - 1] + 1;
    for (std::size_t k = pos - 1; k < power; ++k) cur[k] = v;
  }
  return out;
}

DiffSystem sym_power(const DiffSystem& a, std::size_t power) {
  if (power == 0) throw DomainError("symmetric power needs N >= 1");
  const std::size_t n = a.dimension();
  auto basis = symmetric_basis(n, power);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  // (y^alpha)' = sum_t A_{i_t, j} y^(alpha with i_t replaced by j).
  RfMatrix s(basis.size(), basis.size());
  for (std::size_t row = 0; row < basis.size(); ++row) {
    const auto& mono = basis[row];
    for (std::size_t t = 0; t < power; ++t) {
      const std::size_t i = mono[t];
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j).is_zero()) continue;
        auto target = mono;
        target[t] = j;
        std::sort(target.begin(), target.end());
        s(row, index.at(target)) += a(i, j);
      }
    }
  }
  return DiffSystem(std::move(s));
}

}  // namespace gop
