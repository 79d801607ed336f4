#pragma once

#include "zernike/exact.hpp"

#include <vector>

namespace zernike {

/// Half-integer angular momentum (j, m) stored as doubled integers.
struct AngularMomentum {
  int twice_j = 0;
  int twice_m = 0;

  friend bool operator==(AngularMomentum a, AngularMomentum b) = default;
};

void validate(AngularMomentum jm);

/// General SU(2) Clebsch-Gordan coefficient C^{j,m}_{j1,m1; j2,m2} with the
/// Condon-Shortley phase, by the Racah single-sum formula. Exact; selection
/// rule violations give exact zero.
SignedSqrtRational cgc(AngularMomentum j1m1, AngularMomentum j2m2, AngularMomentum jm);

/// Terminating 3F2 at unit argument: sum_{k=0}^{-a} (a)_k (b)_k (c)_k / ((d)_k (e)_k k!).
/// a must be a nonpositive integer. Throws std::domain_error if a denominator
/// Pochhammer vanishes while the running term is still nonzero.
BigRational hyper3f2_terminating(int a, const BigRational& b, const BigRational& c,
                                 const BigRational& d, const BigRational& e);

/// The special coefficient C^{n1,0}_{n/2,-m/2; n/2,m/2} through the factorial
/// prefactor and terminating 3F2 route. Equals cgc(...) exactly.
SignedSqrtRational special_cgc(int n, int m, int n1);

/// i^{n1} (-1)^{(m+|m|)/2} C^{n1,0}_{n/2,-m/2; n/2,m/2}, with n = n1 + n2.
ExactComplex w_coefficient(int n1, int n2, int m);

/// (-i)^{n1} (-1)^{(m+|m|)/2} C^{n1,0}_{n/2,-m/2; n/2,m/2}.
ExactComplex w_tilde_coefficient(int n, int m, int n1);

/// (n+1) x (n+1) grid of w_coefficient values; rows indexed by n1 descending
/// (n1 = n - row), columns by m descending (m = n - 2*col).
struct InterbasisMatrix {
  int n = 0;
  std::vector<std::vector<ExactComplex>> entries;

  const ExactComplex& at(int row, int col) const { return entries[row][col]; }
  int row_n1(int row) const { return n - row; }
  int col_m(int col) const { return n - 2 * col; }
};

InterbasisMatrix w_matrix(int n);

/// Exact check of W W^dagger = I via phase-grouped rational sums.
bool w_matrix_unitary_exact(const InterbasisMatrix& w);

}  // namespace zernike
