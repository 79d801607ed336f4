#include "zernike/grid.hpp"

#include <stdexcept>
#include <thread>

namespace zernike {

GridSample eval_grid(Basis basis, std::pair<int, int> index, int nx, int ny, int threads) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("eval_grid: resolution must be >= 2");
  if (threads < 1) throw std::invalid_argument("eval_grid: threads must be >= 1");
  if (basis == Basis::I)
    validate(IndexI{index.first, index.second});
  else
    validate(IndexII{index.first, index.second});

  GridSample grid;
  grid.nx = nx;
  grid.ny = ny;
  grid.values.assign(static_cast<size_t>(nx) * ny, {});
  grid.mask.assign(static_cast<size_t>(nx) * ny, 0);

  auto run_rows = [&](int y0, int y1) {
    for (int iy = y0; iy < y1; ++iy) {
      double y = -1.0 + 2.0 * iy / (ny - 1);
      for (int ix = 0; ix < nx; ++ix) {
        double x = -1.0 + 2.0 * ix / (nx - 1);
        if (x * x + y * y > 1.0) continue;
        size_t at = static_cast<size_t>(iy) * nx + ix;
        grid.mask[at] = 1;
        DiskPoint p{x, y};
        grid.values[at] = basis == Basis::I
                              ? psi_I(IndexI{index.first, index.second}, p)
                              : std::complex<double>(psi_II(IndexII{index.first, index.second}, p));
      }
    }
  };

  if (threads == 1) {
    run_rows(0, ny);
  } else {
    int used = std::min(threads, ny);
    std::vector<std::thread> pool;
    for (int t = 0; t < used; ++t) {
      int y0 = ny * t / used, y1 = ny * (t + 1) / used;
      pool.emplace_back(run_rows, y0, y1);
    }
    for (auto& th : pool) th.join();
  }
  return grid;
}

}  // namespace zernike
