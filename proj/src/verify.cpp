#include "zernike/verify.hpp"

#include "zernike/interbasis.hpp"
#include "zernike/oracle.hpp"
#include "zernike/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace zernike {

using std::numbers::pi;

namespace {

void finish(SuiteReport& report) {
  report.pass = true;
  report.exact = !report.checks.empty();
  report.worst_error = 0;
  for (const auto& check : report.checks) {
    report.pass = report.pass && check.pass;
    report.exact = report.exact && check.exact;
    report.worst_error = std::max(report.worst_error, check.error);
  }
}

}  // namespace

SuiteReport verify_orthonormality(VerifyOptions opt) {
  SuiteReport report;
  report.suite = "orthonormality";
  report.n_max = opt.n_max < 0 ? 8 : opt.n_max;
  report.tolerance = opt.tolerance > 0 ? opt.tolerance : 1e-10;
  int order = opt.order > 0 ? opt.order : 64;

  std::vector<IndexI> all_I;
  std::vector<IndexII> all_II;
  for (int n = 0; n <= report.n_max; ++n) {
    auto [idx_I, idx_II] = enumerate_rung(n);
    all_I.insert(all_I.end(), idx_I.begin(), idx_I.end());
    all_II.insert(all_II.end(), idx_II.begin(), idx_II.end());
  }
  size_t count = all_I.size();

  auto nodes = gauss_legendre_01(order);
  int nphi = order;
  std::vector<std::vector<std::complex<long double>>> gram_I(
      count, std::vector<std::complex<long double>>(count, 0.0L));
  std::vector<std::vector<long double>> gram_II(count, std::vector<long double>(count, 0.0L));
  std::vector<std::complex<double>> vals_I(count);
  std::vector<double> vals_II(count);

  for (int i = 0; i < order; ++i) {
    double r = std::sqrt(nodes.x[i]);
    for (int j = 0; j < nphi; ++j) {
      double phi = -pi + 2.0 * pi * j / nphi;
      DiskPoint p{r * std::cos(phi), r * std::sin(phi)};
      for (size_t a = 0; a < count; ++a) vals_I[a] = psi_I(all_I[a], p);
      for (size_t a = 0; a < count; ++a) vals_II[a] = psi_II(all_II[a], p);
      double w = nodes.w[i];
      for (size_t a = 0; a < count; ++a)
        for (size_t b = a; b < count; ++b) {
          gram_I[a][b] += std::complex<long double>(w * (std::conj(vals_I[a]) * vals_I[b]));
          gram_II[a][b] += w * vals_II[a] * vals_II[b];
        }
    }
  }

  double scale = pi / nphi;
  double worst_I = 0, worst_II = 0;
  for (size_t a = 0; a < count; ++a)
    for (size_t b = a; b < count; ++b) {
      double delta = a == b ? 1.0 : 0.0;
      worst_I =
          std::max(worst_I, std::abs(std::complex<double>(gram_I[a][b]) * scale - delta));
      worst_II = std::max(worst_II, std::abs(static_cast<double>(gram_II[a][b]) * scale - delta));
    }
  report.checks.push_back({"basis I gram", worst_I <= report.tolerance, false, worst_I});
  report.checks.push_back({"basis II gram", worst_II <= report.tolerance, false, worst_II});
  finish(report);
  return report;
}

SuiteReport verify_unitarity(VerifyOptions opt) {
  SuiteReport report;
  report.suite = "unitarity";
  report.n_max = opt.n_max < 0 ? 12 : opt.n_max;
  for (int n = 0; n <= report.n_max; ++n) {
    bool ok = w_matrix_unitary_exact(w_matrix(n));
    report.checks.push_back({"n=" + std::to_string(n), ok, ok, 0.0});
  }
  finish(report);
  return report;
}

SuiteReport verify_eigenvalue(VerifyOptions opt) {
  SuiteReport report;
  report.suite = "eigenvalue";
  report.n_max = opt.n_max < 0 ? 12 : opt.n_max;
  for (int n = 0; n <= report.n_max; ++n) {
    auto [idx_I, idx_II] = enumerate_rung(n);
    bool ok = true;
    for (auto idx : idx_I) ok = ok && eigen_residual(idx).exact;
    for (auto idx : idx_II) ok = ok && eigen_residual(idx).exact;
    report.checks.push_back({"rung " + std::to_string(n), ok, ok, 0.0});
  }
  finish(report);
  return report;
}

SuiteReport verify_overlap(VerifyOptions opt) {
  SuiteReport report;
  report.suite = "overlap";
  report.n_max = opt.n_max < 0 ? 8 : opt.n_max;
  report.tolerance = opt.tolerance > 0 ? opt.tolerance : 1e-9;
  QuadratureRule rule{QuadKind::gauss_legendre_product, opt.order > 0 ? opt.order : 96};

  std::vector<double> errors(report.n_max + 1, 0.0);
  auto run_range = [&](int lo, int hi) {
    for (int n = lo; n < hi; ++n) errors[n] = overlap_matrix_numeric(n, rule).max_abs_error;
  };
  int threads = std::clamp(opt.threads, 1, report.n_max + 1);
  if (threads == 1) {
    run_range(0, report.n_max + 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(run_range, (report.n_max + 1) * t / threads,
                        (report.n_max + 1) * (t + 1) / threads);
    for (auto& th : pool) th.join();
  }
  for (int n = 0; n <= report.n_max; ++n)
    report.checks.push_back(
        {"n=" + std::to_string(n), errors[n] <= report.tolerance, false, errors[n]});
  finish(report);
  return report;
}

SuiteReport verify_fourier(VerifyOptions opt) {
  SuiteReport report;
  report.suite = "fourier";
  report.n_max = opt.n_max < 0 ? 10 : opt.n_max;  // bound on lambda + nu
  report.tolerance = opt.tolerance > 0 ? opt.tolerance : 1e-11;
  for (int lambda = 0; lambda <= report.n_max; ++lambda) {
    double worst = 0;
    bool routes_equal = true;
    for (int nu = 0; lambda + nu <= report.n_max; ++nu)
      for (int m = -(lambda + nu + 2); m <= lambda + nu + 2; ++m) {
        auto series = fourier_integral_series(lambda, nu, m);
        auto closed = fourier_integral_closed_form(lambda, nu, m);
        routes_equal = routes_equal && series.over_two_pi == closed.over_two_pi;
        worst = std::max(worst,
                         std::abs(fourier_integral_numeric(lambda, nu, m) - series.value()));
      }
    bool ok = routes_equal && worst <= report.tolerance;
    report.checks.push_back(
        {"lambda=" + std::to_string(lambda), ok, false, routes_equal ? worst : 1.0});
  }
  finish(report);
  return report;
}

SuiteReport verify_symmetry(VerifyOptions opt) {
  SuiteReport report;
  report.suite = "symmetry";
  report.n_max = opt.n_max < 0 ? 12 : opt.n_max;

  bool flip_ok = true;
  for (int n = 0; n <= report.n_max; ++n)
    for (int m = n % 2; m <= n; m += 2)
      for (int n1 = 0; n1 <= n; ++n1) {
        auto plus = special_cgc(n, m, n1);
        auto minus = special_cgc(n, -m, n1);
        bool even = (n - n1) % 2 == 0;
        flip_ok = flip_ok && (plus == (even ? minus : -minus));
      }
  report.checks.push_back({"cgc m-flip parity", flip_ok, flip_ok, 0.0});

  std::mt19937 rng(opt.seed);
  std::uniform_real_distribution<double> uc(0.02, 0.98), uphi(-pi, pi);
  double reality_tol = opt.tolerance > 0 ? opt.tolerance : 1e-10;
  double worst_im = 0;
  for (int n = 0; n <= std::min(report.n_max, 8); ++n) {
    auto [idx_I, idx_II] = enumerate_rung(n);
    auto w = w_matrix(n);
    for (size_t row = 0; row < idx_II.size(); ++row)
      for (int t = 0; t < 100; ++t) {
        AnglesI aI{std::acos(uc(rng)), uphi(rng)};
        std::complex<double> s = 0;
        for (size_t c = 0; c < idx_I.size(); ++c)
          s += w.at(row, c).to_complex() * upsilon_I(idx_I[c], aI);
        worst_im = std::max(worst_im, std::abs(s.imag()));
      }
  }
  report.checks.push_back({"recombination reality", worst_im <= reality_tol, false, worst_im});

  double conj_tol = opt.tolerance > 0 ? opt.tolerance : 1e-12;
  double worst_conj = 0;
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  for (int n = 0; n <= report.n_max; ++n)
    for (int m = n % 2; m <= n; m += 2)
      for (int t = 0; t < 20; ++t) {
        double r = ur(rng), phi = uphi(rng);
        auto diff = psi_I({n, -m}, r, phi) - std::conj(psi_I({n, m}, r, phi));
        worst_conj = std::max(worst_conj, std::abs(diff));
      }
  report.checks.push_back({"conjugation", worst_conj <= conj_tol, false, worst_conj});

  report.tolerance = reality_tol;
  finish(report);
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"orthonormality", "unitarity", "eigenvalue",
                                                 "overlap",        "fourier",   "symmetry"};
  return names;
}

SuiteReport run_suite(std::string_view name, VerifyOptions opt) {
  if (name == "orthonormality") return verify_orthonormality(opt);
  if (name == "unitarity") return verify_unitarity(opt);
  if (name == "eigenvalue") return verify_eigenvalue(opt);
  if (name == "overlap") return verify_overlap(opt);
  if (name == "fourier") return verify_fourier(opt);
  if (name == "symmetry") return verify_symmetry(opt);
  throw std::invalid_argument("unknown verify suite: " + std::string(name));
}

}  // namespace zernike
