#pragma once

#include <optional>
#include <vector>

#include "gop/exactalg/matrix.hpp"

namespace gop {

// Fraction-free (Bareiss) row echelon form of a polynomial matrix. Entries
// below each pivot are eliminated with exact divisions by the previous pivot.
struct EchelonForm {
  Matrix<Polynomial> reduced;
  std::vector<std::size_t> pivot_columns;  // one per pivot row, increasing
  std::size_t rank() const { return pivot_columns.size(); }
};
EchelonForm bareiss_echelon(Matrix<Polynomial> m);

// A nonzero c with columns * c = 0, or nullopt when the columns are linearly
// independent over Q(z). The entry at the first column that is dependent on
// its predecessors is 1 and the entries after it are 0.
std::optional<std::vector<RationalFunction>> kernel_vector(const RfMatrix& columns);

}  // namespace gop
