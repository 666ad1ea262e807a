#include "gop/diffsystems/product_block.hpp"

#include "gop/errors.hpp"

namespace gop {

namespace {

// Coordinates of an operator of order < n on D^0 ... D^(n-1).
std::vector<RationalFunction> coordinates(const OreOperator& r, std::size_t n) {
  if (r.order() >= static_cast<long>(n)) throw DomainError("operator is not reduced");
  std::vector<RationalFunction> v(n);
  for (std::size_t i = 0; i < r.coefficients().size(); ++i) v[i] = r.coefficients()[i];
  return v;
}

}  // namespace

RfMatrix cyclic_action(const OreOperator& l) {
  if (l.order() < 1) throw DomainError("cyclic module of an operator of order < 1");
  const auto n = static_cast<std::size_t>(l.order());
  RfMatrix a(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto col = coordinates(right_remainder(OreOperator::derivation(k + 1), l), n);
    for (std::size_t i = 0; i < n; ++i) a(i, k) = col[i];
  }
  return a;
}

OreOperator exact_sequence_phi(const OreOperator& u, const OreOperator& l1, const OreOperator& l2) {
  return right_remainder(right_remainder(u, l1) * l2, l1 * l2);
}

OreOperator exact_sequence_psi(const OreOperator& u, const OreOperator& l2) { return right_remainder(u, l2); }

ProductBlockSystem product_block_system(const OreOperator& l1, const OreOperator& l2) {
  if (l1.order() < 1 || l2.order() < 1) throw DomainError("product block system needs orders >= 1");
  const auto n1 = static_cast<std::size_t>(l1.order());
  const auto n2 = static_cast<std::size_t>(l2.order());
  const std::size_t n = n1 + n2;
  OreOperator prod = l1 * l2;

  std::vector<OreOperator> basis;
  for (std::size_t i = 0; i < n1; ++i) basis.push_back(OreOperator::derivation(i) * l2);
  for (std::size_t j = 0; j < n2; ++j) basis.push_back(OreOperator::derivation(j));

  RfMatrix p(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto col = coordinates(basis[k], n);
    for (std::size_t i = 0; i < n; ++i) p(i, k) = col[i];
  }
  RfMatrix pinv = inverse(p);

  // Coordinates of D f_k in the adapted basis: P^-1 times standard coordinates.
  RfMatrix standard(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto col = coordinates(right_remainder(basis[k].derive_left(), prod), n);
    for (std::size_t i = 0; i < n; ++i) standard(i, k) = col[i];
  }
  RfMatrix action = pinv * standard;
  return ProductBlockSystem{std::move(prod), n1, n2, DiffSystem(std::move(action)), std::move(p)};
}

}  // namespace gop
