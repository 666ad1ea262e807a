#pragma once

#include "gop/diffsystems/diff_system.hpp"
#include "gop/orealg/ore_operator.hpp"

namespace gop {

// Companion matrix of L / lc(L): ones on the superdiagonal, last row
// -a_0 ... -a_{n-1}. Requires ord L >= 1.
DiffSystem companion_matrix(const OreOperator& l);

// Monic least common left multiple: the first linear dependence among the
// pairs (D^k mod L1, D^k mod L2), k = 0, 1, ...
OreOperator lclm(const OreOperator& l1, const OreOperator& l2);

// Monic operator of minimal order annihilating every product y1*y2 with
// L1 y1 = 0 and L2 y2 = 0: the first linear dependence among the
// derivatives of y1*y2 written on the basis D^i(y1) D^j(y2).
OreOperator symmetric_product(const OreOperator& l1, const OreOperator& l2);

}  // namespace gop
