#include "doctest.h"
#include "zernike/bases.hpp"
#include "zernike/oracle.hpp"
#include "zernike/special_poly.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

using namespace zernike;
using std::numbers::pi;

namespace {

const double kInvSqrtPi = 1.0 / std::sqrt(pi);

std::complex<double> eval_pair(const NormalizedPolyPair& p, double x, double y) {
  double norm = std::sqrt(to_double(p.norm_factor_squared) * std::pow(pi, p.pi_power));
  return {norm * poly_eval(p.poly_re, x, y), norm * poly_eval(p.poly_im, x, y)};
}

}  // namespace

TEST_CASE("rung enumeration order") {
  auto [i0, ii0] = enumerate_rung(0);
  REQUIRE(i0.size() == 1);
  REQUIRE(ii0.size() == 1);
  CHECK(i0[0].n == 0);
  CHECK(i0[0].m == 0);
  CHECK(ii0[0].n1 == 0);
  CHECK(ii0[0].n2 == 0);

  auto [i2, ii2] = enumerate_rung(2);
  REQUIRE(i2.size() == 3);
  CHECK(i2[0].m == 2);
  CHECK(i2[1].m == 0);
  CHECK(i2[2].m == -2);
  REQUIRE(ii2.size() == 3);
  CHECK(ii2[0].n1 == 2);
  CHECK(ii2[1].n1 == 1);
  CHECK(ii2[2].n1 == 0);
  for (auto idx : ii2) CHECK(idx.n1 + idx.n2 == 2);

  auto [i4, ii4] = enumerate_rung(4);
  REQUIRE(i4.size() == 5);
  for (int c = 0; c < 5; ++c) {
    CHECK(i4[c].n == 4);
    CHECK(i4[c].m == 4 - 2 * c);
  }
  for (auto idx : i4) CHECK(is_valid(idx));
  for (auto idx : ii4) CHECK(is_valid(idx));
}

TEST_CASE("first-kind disk functions: pinned values") {
  CHECK(std::abs(psi_I({0, 0}, 0.37, 1.2) - std::complex<double>(kInvSqrtPi)) <= 1e-15);
  CHECK(std::abs(psi_I({1, 1}, 1.0, 0.0) - std::complex<double>(std::sqrt(2.0 / pi))) <= 1e-15);
  CHECK(std::abs(psi_I({2, 0}, 1.0 / std::sqrt(2.0), 0.9)) <= 1e-15);

  // (2,2): sqrt(3/pi) r^2 e^{2 i phi}
  std::complex<double> expect = std::sqrt(3.0 / pi) * 0.25 * std::polar(1.0, 1.4);
  CHECK(std::abs(psi_I({2, 2}, 0.5, 0.7) - expect) <= 1e-14);

  DiskPoint p{0.3, -0.4};
  double r = std::hypot(p.x, p.y), phi = std::atan2(p.y, p.x);
  for (auto idx : {IndexI{3, 1}, IndexI{4, -2}, IndexI{6, 0}})
    CHECK(std::abs(psi_I(idx, p) - psi_I(idx, r, phi)) <= 1e-14);

  CHECK_THROWS_AS(psi_I({2, 1}, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(psi_I({1, -3}, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("first-kind conjugation symmetry") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ur(0.0, 1.0), uphi(-pi, pi);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {4, 2}, {5, 3}, {8, 6}, {7, 1}})
    for (int t = 0; t < 20; ++t) {
      double r = ur(rng), phi = uphi(rng);
      auto a = psi_I({n, m}, r, phi);
      auto b = psi_I({n, -m}, r, phi);
      CHECK(std::abs(b - std::conj(a)) <= 1e-15);
    }
}

TEST_CASE("first-kind sphere lift") {
  // Upsilon^I(theta, phi) = (-1)^{n_r} (1 - r^2)^{1/4} Psi^I(r, phi) at r = sin(theta)
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ut(0.05, std::numbers::pi / 2 - 0.05), uphi(-pi, pi);
  for (int n = 0; n <= 8; ++n) {
    auto [idx_I, idx_II] = enumerate_rung(n);
    for (auto idx : idx_I)
      for (int t = 0; t < 10; ++t) {
        double theta = ut(rng), phi = uphi(rng);
        double r = std::sin(theta);
        double root = std::sqrt(std::cos(theta));
        double sign = idx.n_r() % 2 ? -1.0 : 1.0;
        auto lifted = upsilon_I(idx, {theta, phi});
        auto flat = psi_I(idx, r, phi);
        CHECK(std::abs(lifted - sign * root * flat) <= 1e-12);
      }
  }
}

TEST_CASE("second-kind disk functions: pinned values") {
  CHECK(std::abs(psi_II({0, 0}, {0.3, 0.2}) - kInvSqrtPi) <= 1e-15);
  CHECK(std::abs(psi_II({1, 0}, {0.2, 0.3}) - 2.0 * kInvSqrtPi * 0.3) <= 1e-15);

  // n1 = 0 row restricted to the x axis: Chebyshev of the second kind
  for (int n2 = 0; n2 <= 12; ++n2)
    for (double x : {-0.9, -0.35, 0.0, 0.4, 0.8}) {
      double expect = kInvSqrtPi * chebyshev_u_eval(n2, x);
      CHECK(std::abs(psi_II({0, n2}, {x, 0.0}) - expect) <= 1e-11);
    }

  // edge continuity where the product form degenerates
  double at_edge = psi_II({2, 1}, {1.0, 0.0});
  double near_edge = psi_II({2, 1}, {1.0 - 1e-9, 0.0});
  CHECK(std::isfinite(at_edge));
  CHECK(std::abs(at_edge - near_edge) <= 1e-7);

  CHECK_THROWS_AS(psi_II({-1, 0}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("second-kind normalization constants") {
  CHECK(norm_const_II({0, 0}).value_squared == 1);
  CHECK(norm_const_II({1, 0}).value_squared == 4);
  CHECK(norm_const_II({0, 1}).value_squared == 1);
  CHECK(norm_const_II({0, 0}).pi_power == -1);
  for (auto idx : {IndexII{2, 3}, IndexII{5, 0}, IndexII{3, 4}}) {
    auto c = norm_const_II(idx);
    CHECK(std::abs(c.value() * c.value() - to_double(c.value_squared) / pi) <= 1e-15);
  }
}

TEST_CASE("second-kind sphere lift") {
  // Upsilon^II at the image angles equals (1 - r^2)^{1/4} Psi^II on the disk
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> ur(0.0, 0.98), uphi(-pi, pi);
  for (int n = 0; n <= 8; ++n) {
    auto [idx_I, idx_II] = enumerate_rung(n);
    for (auto idx : idx_II)
      for (int t = 0; t < 10; ++t) {
        double r = ur(rng), phi = uphi(rng);
        DiskPoint p{r * std::cos(phi), r * std::sin(phi)};
        auto aII = sphere_to_anglesII(disk_to_sphere(p));
        double root = std::pow(1.0 - r * r, 0.25);
        CHECK(std::abs(upsilon_II(idx, aII) - root * psi_II(idx, p)) <= 1e-12);
      }
  }
}

TEST_CASE("cartesian expansions match product forms") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> ur(0.0, 0.999), uphi(-pi, pi);
  for (int n = 0; n <= 10; ++n) {
    auto [idx_I, idx_II] = enumerate_rung(n);
    for (int t = 0; t < 5; ++t) {
      double r = ur(rng), phi = uphi(rng);
      DiskPoint p{r * std::cos(phi), r * std::sin(phi)};
      for (auto idx : idx_I) {
        auto pair = basis_I_cartesian(idx.n, idx.m);
        CHECK(std::abs(eval_pair(pair, p.x, p.y) - psi_I(idx, p)) <= 1e-12);
      }
      for (auto idx : idx_II) {
        auto pair = basis_II_cartesian(idx.n1, idx.n2);
        CHECK(std::abs(eval_pair(pair, p.x, p.y).real() - psi_II(idx, p)) <= 1e-12);
        CHECK(eval_pair(pair, p.x, p.y).imag() == 0.0);
      }
    }
  }
}

TEST_CASE("orthonormality on the disk") {
  // all pairs within rungs <= 8, both families, one shared node sweep
  std::vector<IndexI> all_I;
  std::vector<IndexII> all_II;
  for (int n = 0; n <= 8; ++n) {
    auto [idx_I, idx_II] = enumerate_rung(n);
    all_I.insert(all_I.end(), idx_I.begin(), idx_I.end());
    all_II.insert(all_II.end(), idx_II.begin(), idx_II.end());
  }
  size_t count = all_I.size();
  REQUIRE(count == 45);
  REQUIRE(all_II.size() == count);

  auto nodes = gauss_legendre_01(64);
  int nphi = 128;
  std::vector<std::vector<std::complex<long double>>> gram_I(
      count, std::vector<std::complex<long double>>(count, 0.0L));
  std::vector<std::vector<long double>> gram_II(count, std::vector<long double>(count, 0.0L));
  std::vector<std::complex<double>> vals_I(count);
  std::vector<double> vals_II(count);

  for (size_t i = 0; i < nodes.x.size(); ++i) {
    double r = std::sqrt(nodes.x[i]);
    for (int j = 0; j < nphi; ++j) {
      double phi = -pi + 2.0 * pi * j / nphi;
      DiskPoint p{r * std::cos(phi), r * std::sin(phi)};
      for (size_t a = 0; a < count; ++a) vals_I[a] = psi_I(all_I[a], p);
      for (size_t a = 0; a < count; ++a) vals_II[a] = psi_II(all_II[a], p);
      double w = nodes.w[i];
      for (size_t a = 0; a < count; ++a)
        for (size_t b = 0; b < count; ++b) {
          gram_I[a][b] += std::complex<long double>(w * (std::conj(vals_I[a]) * vals_I[b]));
          gram_II[a][b] += w * vals_II[a] * vals_II[b];
        }
    }
  }

  double scale = pi / nphi;
  double worst_I = 0, worst_II = 0;
  for (size_t a = 0; a < count; ++a)
    for (size_t b = 0; b < count; ++b) {
      double delta = a == b ? 1.0 : 0.0;
      worst_I = std::max(worst_I,
                         std::abs(std::complex<double>(gram_I[a][b]) * scale - delta));
      worst_II = std::max(worst_II, std::abs(static_cast<double>(gram_II[a][b]) * scale - delta));
    }
  CHECK(worst_I <= 1e-10);
  CHECK(worst_II <= 1e-10);
}

TEST_CASE("interbasis relation at sample points") {
  // Upsilon^II vector = W * Upsilon^I vector, pointwise on the half-sphere
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> uc(0.05, 0.95), uphi(-pi, pi);
  for (int n = 0; n <= 8; ++n) {
    auto [idx_I, idx_II] = enumerate_rung(n);
    auto w = w_matrix(n);
    for (int t = 0; t < 100; ++t) {
      double theta = std::acos(uc(rng)), phi = uphi(rng);
      AnglesI aI{theta, phi};
      AnglesII aII = sphere_to_anglesII(anglesI_to_sphere(aI));
      std::vector<std::complex<double>> ups(idx_I.size());
      for (size_t c = 0; c < idx_I.size(); ++c) ups[c] = upsilon_I(idx_I[c], aI);
      for (size_t row = 0; row < idx_II.size(); ++row) {
        std::complex<double> s = 0;
        for (size_t c = 0; c < ups.size(); ++c) s += w.at(row, c).to_complex() * ups[c];
        CHECK(std::abs(s.imag()) <= 1e-10);
        CHECK(std::abs(s - std::complex<double>(upsilon_II(idx_II[row], aII))) <= 1e-10);
      }
    }
  }
}
