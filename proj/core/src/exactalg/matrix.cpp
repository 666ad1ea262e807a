#include "gop/exactalg/matrix.hpp"

#include <sstream>

namespace gop {

RfMatrix derivative(const RfMatrix& m) {
  return m.map([](const RationalFunction& f) { return f.derivative(); });
}

RfMatrix inverse(const RfMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RfMatrix a = m;
  RfMatrix inv = RfMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DomainError("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    RationalFunction scale = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      RationalFunction f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RfMatrix power(const RfMatrix& m, unsigned k) {
  RfMatrix r = RfMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

std::string to_string(const RfMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace gop
