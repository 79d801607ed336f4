#pragma once

#include "zernike/spectrum.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace zernike {

/// Row-major Cartesian sampling of [-1,1]^2; values meaningful only where
/// mask is true (cells inside the closed disk).
struct GridSample {
  int nx = 0;
  int ny = 0;
  std::vector<std::complex<double>> values;  // index iy * nx + ix
  std::vector<std::uint8_t> mask;
};

/// Samples one basis function; index is (n, m) or (n1, n2). Resolution >= 2
/// per axis. threads > 1 splits rows; output is identical at any count.
GridSample eval_grid(Basis basis, std::pair<int, int> index, int nx, int ny, int threads = 1);

}  // namespace zernike
