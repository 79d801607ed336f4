#include "zernike/bases.hpp"

#include "zernike/poly2d.hpp"
#include "zernike/special_poly.hpp"

#include <cmath>
#include <numbers>

namespace zernike {

namespace {
// below this, 1 - x^2 is too small for the separated form of psi_II
constexpr double kEdgeTol = 1e-10;

double int_pow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}
}  // namespace

bool is_valid(IndexI idx) {
  return idx.n >= std::abs(idx.m) && (idx.n - std::abs(idx.m)) % 2 == 0;
}

bool is_valid(IndexII idx) { return idx.n1 >= 0 && idx.n2 >= 0; }

void validate(IndexI idx) {
  if (!is_valid(idx)) throw std::invalid_argument("IndexI: need n >= |m| with n - |m| even");
}

void validate(IndexII idx) {
  if (!is_valid(idx)) throw std::invalid_argument("IndexII: degrees must be nonnegative");
}

double NormConstII::value() const {
  return std::sqrt(to_double(value_squared) * std::pow(std::numbers::pi, pi_power));
}

std::pair<std::vector<IndexI>, std::vector<IndexII>> enumerate_rung(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_rung: negative rung");
  std::vector<IndexI> list_I;
  std::vector<IndexII> list_II;
  list_I.reserve(n + 1);
  list_II.reserve(n + 1);
  for (int m = n; m >= -n; m -= 2) list_I.push_back({n, m});
  for (int n1 = n; n1 >= 0; --n1) list_II.push_back({n1, n - n1});
  return {std::move(list_I), std::move(list_II)};
}

std::complex<double> psi_I(IndexI idx, double r, double phi) {
  validate(idx);
  int am = std::abs(idx.m), nr = idx.n_r();
  double radial = int_pow(r, am) * jacobi_eval(nr, am, 0, 1.0 - 2.0 * r * r);
  double norm = std::sqrt((idx.n + 1) / std::numbers::pi);
  double sign = nr % 2 ? -1.0 : 1.0;
  return sign * norm * radial * std::exp(std::complex<double>(0.0, idx.m * phi));
}

std::complex<double> psi_I(IndexI idx, DiskPoint p) {
  double r = std::hypot(p.x, p.y);
  double phi = (r == 0.0) ? 0.0 : std::atan2(p.y, p.x);
  return psi_I(idx, r, phi);
}

std::complex<double> upsilon_I(IndexI idx, AnglesI a) {
  validate(idx);
  int am = std::abs(idx.m), nr = idx.n_r();
  double st = std::sin(a.theta), ct = std::cos(a.theta);
  double norm = std::sqrt((idx.n + 1) / std::numbers::pi);
  double v = norm * int_pow(st, am) * std::sqrt(std::max(0.0, ct)) *
             jacobi_eval(nr, am, 0, std::cos(2.0 * a.theta));
  return v * std::exp(std::complex<double>(0.0, idx.m * a.phi));
}

double psi_II(IndexII idx, DiskPoint p) {
  validate(idx);
  double one_minus_x2 = (1.0 - p.x) * (1.0 + p.x);
  if (one_minus_x2 < kEdgeTol) {
    auto pair = basis_II_cartesian(idx.n1, idx.n2);
    return poly_eval(pair.poly_re, p.x, p.y) * norm_const_II(idx).value();
  }
  double s = std::sqrt(one_minus_x2);
  double v = int_pow(s, idx.n1) * gegenbauer_eval(idx.n2, idx.n1 + 1, p.x) *
             legendre_eval(idx.n1, p.y / s);
  return norm_const_II(idx).value() * v;
}

double upsilon_II(IndexII idx, AnglesII a) {
  validate(idx);
  double stp = std::sin(a.theta_p), spp = std::sin(a.phi_p);
  double v = int_pow(stp, idx.n1) * std::sqrt(std::max(0.0, stp)) *
             std::sqrt(std::max(0.0, spp)) * gegenbauer_eval(idx.n2, idx.n1 + 1, std::cos(a.theta_p)) *
             legendre_eval(idx.n1, std::cos(a.phi_p));
  return norm_const_II(idx).value() * v;
}

NormConstII norm_const_II(IndexII idx) {
  validate(idx);
  return {basis_II_norm_squared(idx.n1, idx.n2), -1};
}

}  // namespace zernike
