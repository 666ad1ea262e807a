#pragma once

#include <vector>

#include "gop/diffsystems/diff_system.hpp"
#include "gop/orealg/ore_operator.hpp"

namespace gop {

// The D-action on Q(z)[D] / Q(z)[D] L1 L2 in the adapted basis
//   f_i = D^i L2      (i < ord L1)   spanning the image of phi,
//   f_{n1+j} = D^j    (j < ord L2)   lifting a basis of the quotient,
// with column k holding the coordinates of D f_k. The lower-left block is
// zero, the upper-left block is the transposed companion matrix of L1 and
// the lower-right block the transposed companion matrix of L2.
struct ProductBlockSystem {
  OreOperator product;  // L1 L2
  std::size_t order1 = 0;
  std::size_t order2 = 0;
  DiffSystem action;
  // Columns: coordinates of the adapted basis on D^0 ... D^(n-1); with S the
  // action on that standard basis, action = gauge_inverse(change_of_basis, S).
  RfMatrix change_of_basis;

  RfMatrix upper_left() const { return action.matrix().block(0, 0, order1, order1); }
  RfMatrix upper_right() const { return action.matrix().block(0, order1, order1, order2); }
  RfMatrix lower_left() const { return action.matrix().block(order1, 0, order2, order1); }
  RfMatrix lower_right() const { return action.matrix().block(order1, order1, order2, order2); }
};

ProductBlockSystem product_block_system(const OreOperator& l1, const OreOperator& l2);

// D-action on Q(z)[D] / Q(z)[D] L in the basis 1, D, ..., D^(n-1), column
// convention; equals companion_matrix(L) transposed.
RfMatrix cyclic_action(const OreOperator& l);

// phi: u mod L1 -> u L2 mod L1 L2.
OreOperator exact_sequence_phi(const OreOperator& u, const OreOperator& l1, const OreOperator& l2);
// psi: u mod L1 L2 -> u mod L2.
OreOperator exact_sequence_psi(const OreOperator& u, const OreOperator& l2);

}  // namespace gop
