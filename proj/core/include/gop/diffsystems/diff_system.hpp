#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gop/exactalg/matrix.hpp"

namespace gop {

// The system y' = G y with G an n x n matrix over Q(z), n >= 1.
class DiffSystem {
 public:
  explicit DiffSystem(RfMatrix g);

  const RfMatrix& matrix() const { return g_; }
  std::size_t dimension() const { return g_.rows(); }
  const RationalFunction& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }

  friend bool operator==(const DiffSystem& a, const DiffSystem& b) { return a.g_ == b.g_; }
  friend bool operator!=(const DiffSystem& a, const DiffSystem& b) { return !(a == b); }

  std::string to_string() const { return gop::to_string(g_); }

 private:
  RfMatrix g_;
};

// G_0 = I, G_{m+1} = G_m G + G_m', so that y^(m) = G_m y on solutions, and
// the divided matrices G_m / m!.
struct IteratedFamily {
  DiffSystem base;
  std::vector<RfMatrix> entries;
  std::vector<RfMatrix> divided;

  std::size_t s_max() const { return entries.size() - 1; }
};

IteratedFamily iterated(const DiffSystem& g, std::size_t s_max);

// Primitive lcm of the entry denominators of G.
Polynomial denominator_lcm(const DiffSystem& g);

// M_m = T^m G_m / m! for m = 0 ... s_max, computed on polynomial matrices by
//   M_{m+1} = (M_m (T G) + T M_m' - m T' M_m) / (m + 1).
// T G must have polynomial entries.
struct ClearedIterates {
  Polynomial t;
  std::vector<Matrix<Polynomial>> scaled;
};
ClearedIterates cleared_iterates(const DiffSystem& g, const Polynomial& t, std::size_t s_max);

// P[G] = P G P^-1 + P' P^-1: the system satisfied by P y when y' = G y.
DiffSystem gauge(const RfMatrix& p, const DiffSystem& g);
// The opposite convention P^-1 P' + P^-1 G P, i.e. the matrix of the
// derivation in the basis e P when G is its matrix in the basis e.
DiffSystem gauge_inverse(const RfMatrix& p, const DiffSystem& g);

// -G^T.
DiffSystem dual(const DiffSystem& g);
// Block diagonal A (+) B.
DiffSystem direct_sum(const DiffSystem& a, const DiffSystem& b);
// A (x) I + I (x) B on the Kronecker basis e_i (x) f_j, index i * dim B + j.
DiffSystem tensor(const DiffSystem& a, const DiffSystem& b);

// Nondecreasing index tuples (i_1 <= ... <= i_N) over {0..n-1} in
// lexicographic order: the monomial basis of the N-th symmetric power.
std::vector<std::vector<std::size_t>> symmetric_basis(std::size_t n, std::size_t power);
// System satisfied by the degree-N monomials in the coordinates of a
// solution of y' = A y, on symmetric_basis(n, N).
DiffSystem sym_power(const DiffSystem& a, std::size_t power);

}  // namespace gop
