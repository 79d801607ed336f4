#pragma once

#include "zernike/bases.hpp"
#include "zernike/exact.hpp"
#include "zernike/geometry.hpp"
#include "zernike/interbasis.hpp"
#include "zernike/poly2d.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace zernike {

enum class QuadKind { gauss_legendre_product, trapezoid_periodic };

struct QuadratureRule {
  QuadKind kind = QuadKind::gauss_legendre_product;
  int order = 64;  // points per axis
};

/// Gauss-Legendre nodes and weights on [0,1]; weights sum to 1.
struct Nodes01 {
  std::vector<double> x;
  std::vector<double> w;
};
Nodes01 gauss_legendre_01(int order);

using DiskFn = std::function<std::complex<double>(DiskPoint)>;
using SphereFn = std::function<std::complex<double>(SpherePoint)>;

/// Integral over the closed unit disk of conj(f) * g, via the substitution
/// u = r^2 (Gauss-Legendre in u, periodic trapezoid in phi).
std::complex<double> disk_inner_product(const DiskFn& f, const DiskFn& g, QuadratureRule rule);

/// Integral over the upper half-sphere of conj(f) * g with the area measure
/// (Gauss-Legendre in cos(theta), periodic trapezoid in phi).
std::complex<double> half_sphere_inner_product(const SphereFn& f, const SphereFn& g,
                                               QuadratureRule rule);

struct OverlapReport {
  int n = 0;
  std::vector<std::vector<std::complex<double>>> numeric;  // rows n1 desc, cols m desc
  std::vector<std::vector<std::complex<double>>> exact;
  double max_abs_error = 0;
};

/// Numeric half-sphere overlaps of the two upper families against the exact
/// interbasis entries.
OverlapReport overlap_matrix_numeric(int n, QuadratureRule rule);

/// Direct periodic-trapezoid evaluation of the angular integral
/// int_{-pi}^{pi} sin^lambda(phi) C^{lambda+1}_nu(cos phi) e^{-i m phi} dphi.
std::complex<double> fourier_integral_numeric(int lambda, int nu, int m);

/// Exact value of the angular integral divided by 2*pi.
struct FourierExact {
  ExactComplex over_two_pi;
  std::complex<double> value() const;
};

/// Exact evaluation by collapsing both factors' finite Fourier expansions.
FourierExact fourier_integral_series(int lambda, int nu, int m);

/// Exact evaluation through the factorial-prefactor terminating 3F2 closed form.
FourierExact fourier_integral_closed_form(int lambda, int nu, int m);

struct EigenCheck {
  bool exact = false;   // residual identically zero
  int eigenvalue = 0;   // n(n+2)
  BivariatePoly residual_re;
  BivariatePoly residual_im;
};

EigenCheck eigen_residual(IndexI idx);
EigenCheck eigen_residual(IndexII idx);

}  // namespace zernike
