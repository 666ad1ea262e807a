#include "gop/exactalg/linear_dependence.hpp"

namespace gop {

EchelonForm bareiss_echelon(Matrix<Polynomial> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  Polynomial previous(1);
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t p = r;
    while (p < rows && m(p, j).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
    }
    const Polynomial pivot = m(r, j);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Polynomial factor = m(i, j);
      for (std::size_t k = j + 1; k < cols; ++k) {
        Polynomial v = pivot * m(i, k) - factor * m(r, k);
        m(i, k) = previous.is_constant() ? v * (1 / previous.leading()) : exact_divide(v, previous);
      }
      m(i, j) = Polynomial();
    }
    previous = pivot;
    pivots.push_back(j);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::optional<std::vector<RationalFunction>> kernel_vector(const RfMatrix& columns) {
  const std::size_t rows = columns.rows();
  const std::size_t cols = columns.cols();
  // Scale column j by the lcm of its denominators to get polynomial entries.
  std::vector<Polynomial> scale(cols, Polynomial(1));
  Matrix<Polynomial> poly(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) scale[j] = lcm(scale[j], columns(i, j).den());
    for (std::size_t i = 0; i < rows; ++i) {
      const RationalFunction& e = columns(i, j);
      poly(i, j) = e.is_zero() ? Polynomial() : exact_divide(e.num() * scale[j], e.den());
    }
  }
  EchelonForm ech = bareiss_echelon(std::move(poly));
  if (ech.rank() == cols) return std::nullopt;

  std::size_t free_col = 0;
  for (std::size_t k = 0; k < ech.pivot_columns.size() && ech.pivot_columns[k] == free_col; ++k) ++free_col;

  std::vector<RationalFunction> d(cols);
  d[free_col] = RationalFunction(1);
  for (std::size_t r = ech.rank(); r-- > 0;) {
    const std::size_t pc = ech.pivot_columns[r];
    RationalFunction acc;
    for (std::size_t k = pc + 1; k < cols; ++k) {
      if (!d[k].is_zero() && !ech.reduced(r, k).is_zero()) acc += RationalFunction(ech.reduced(r, k)) * d[k];
    }
    d[pc] = acc.is_zero() ? RationalFunction() : -acc / RationalFunction(ech.reduced(r, pc));
  }
  // Undo the column scaling: columns * c = poly * d with c_j = d_j * scale_j.
  std::vector<RationalFunction> c(cols);
  for (std::size_t j = 0; j < cols; ++j) c[j] = d[j] * RationalFunction(scale[j]);
  // Renormalize so the first free entry is exactly 1.
  RationalFunction norm = c[free_col].inverse();
  for (auto& x : c) x *= norm;
  return c;
}

}  // namespace gop
