#pragma once

#include "zernike/exact.hpp"
#include "zernike/geometry.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace zernike {

/// Polar-separated family label (n, m): n >= |m|, n - |m| even.
struct IndexI {
  int n = 0;
  int m = 0;

  int n_r() const { return (n - std::abs(m)) / 2; }
  friend bool operator==(IndexI a, IndexI b) = default;
};

/// Non-orthogonal-separated family label (n1, n2); rung n = n1 + n2.
struct IndexII {
  int n1 = 0;
  int n2 = 0;

  int rung() const { return n1 + n2; }
  friend bool operator==(IndexII a, IndexII b) = default;
};

bool is_valid(IndexI idx);
bool is_valid(IndexII idx);
void validate(IndexI idx);
void validate(IndexII idx);

struct NormConstII {
  BigRational value_squared;  // rational part; true square is value_squared / pi
  int pi_power = -1;

  double value() const;  // positive root
};

/// All indices of rung n, ordered to match the printed matrix layout:
/// m descending (n, n-2, ..., -n) and n1 descending (n, n-1, ..., 0).
std::pair<std::vector<IndexI>, std::vector<IndexII>> enumerate_rung(int n);

std::complex<double> psi_I(IndexI idx, double r, double phi);
std::complex<double> psi_I(IndexI idx, DiskPoint p);
std::complex<double> upsilon_I(IndexI idx, AnglesI a);

double psi_II(IndexII idx, DiskPoint p);
double upsilon_II(IndexII idx, AnglesII a);

NormConstII norm_const_II(IndexII idx);

}  // namespace zernike
