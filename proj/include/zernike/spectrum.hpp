#pragma once

#include "zernike/bases.hpp"
#include "zernike/geometry.hpp"

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace zernike {

enum class Basis { I, II };

/// Coefficient vector over one basis through rung max_rung. Keys are (n, m)
/// for basis I and (n1, n2) for basis II; absent keys mean zero. Basis II
/// coefficients must be real (|imag| <= 1e-12).
struct WavefrontSpectrum {
  Basis basis = Basis::I;
  int max_rung = 0;
  std::map<std::pair<int, int>, std::complex<double>> coeffs;
};

inline constexpr double kBasisIIImagTol = 1e-12;

/// Throws std::invalid_argument on invalid indices, rungs beyond max_rung,
/// or complex basis-II coefficients.
void validate(const WavefrontSpectrum& spec);

std::complex<double> coeff(const WavefrontSpectrum& spec, int a, int b);

/// Pointwise synthesis of the represented disk function.
std::complex<double> spectrum_eval(const WavefrontSpectrum& spec, DiskPoint p);

/// Change of basis preserving the represented disk function, rung by rung.
WavefrontSpectrum convert(const WavefrontSpectrum& spec, Basis target);

struct Sample {
  double x = 0;
  double y = 0;
  std::complex<double> value;
};

struct FitReport {
  WavefrontSpectrum spectrum;
  double rms_residual = 0;
  double max_residual = 0;
  int rank = 0;
  int basis_count = 0;
};

/// Least-squares projection of in-disk samples onto one basis through rung
/// n_max. Requires at least as many samples as basis functions; throws
/// std::runtime_error on rank deficiency (message carries rank and need).
FitReport fit(std::span<const Sample> samples, Basis basis, int n_max);

}  // namespace zernike
