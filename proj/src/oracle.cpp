#include "zernike/oracle.hpp"

#include "zernike/special_poly.hpp"

#include <cmath>
#include <numbers>

namespace zernike {

using std::numbers::pi;

namespace {

// Legendre value and derivative for the Newton node solve.
std::pair<double, double> legendre_with_deriv(int n, double x) {
  double pm1 = 1.0, p = x;
  for (int k = 2; k <= n; ++k) {
    double next = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
    pm1 = p;
    p = next;
  }
  double d = n * (x * p - pm1) / (x * x - 1.0);
  return {p, d};
}

int trapezoid_points(QuadratureRule rule) { return rule.order; }

}  // namespace

Nodes01 gauss_legendre_01(int order) {
  if (order < 2) throw std::invalid_argument("gauss_legendre_01: order must be >= 2");
  Nodes01 out;
  out.x.resize(order);
  out.w.resize(order);
  for (int i = 0; i < order; ++i) {
    // Tricomi-style initial guess, then Newton
    double x = std::cos(pi * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, d] = legendre_with_deriv(order, x);
      double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    auto [p, d] = legendre_with_deriv(order, x);
    (void)p;
    double w = 2.0 / ((1.0 - x * x) * d * d);
    out.x[i] = 0.5 * (x + 1.0);
    out.w[i] = 0.5 * w;
  }
  return out;
}

std::complex<double> disk_inner_product(const DiskFn& f, const DiskFn& g, QuadratureRule rule) {
  auto nodes = gauss_legendre_01(rule.order);
  int nphi = trapezoid_points(rule);
  long double acc_re = 0.0L, acc_im = 0.0L;
  for (int i = 0; i < rule.order; ++i) {
    double r = std::sqrt(nodes.x[i]);
    long double row_re = 0.0L, row_im = 0.0L;
    for (int j = 0; j < nphi; ++j) {
      double phi = -pi + 2.0 * pi * j / nphi;
      DiskPoint p{r * std::cos(phi), r * std::sin(phi)};
      std::complex<double> v = std::conj(f(p)) * g(p);
      row_re += v.real();
      row_im += v.imag();
    }
    acc_re += nodes.w[i] * row_re;
    acc_im += nodes.w[i] * row_im;
  }
  long double scale = pi / nphi;  // (1/2) du * (2 pi / nphi)
  return {static_cast<double>(acc_re * scale), static_cast<double>(acc_im * scale)};
}

std::complex<double> half_sphere_inner_product(const SphereFn& f, const SphereFn& g,
                                               QuadratureRule rule) {
  auto nodes = gauss_legendre_01(rule.order);
  int nphi = trapezoid_points(rule);
  long double acc_re = 0.0L, acc_im = 0.0L;
  for (int i = 0; i < rule.order; ++i) {
    double ct = nodes.x[i];
    double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    long double row_re = 0.0L, row_im = 0.0L;
    for (int j = 0; j < nphi; ++j) {
      double phi = -pi + 2.0 * pi * j / nphi;
      SpherePoint s{st * std::cos(phi), st * std::sin(phi), ct};
      std::complex<double> v = std::conj(f(s)) * g(s);
      row_re += v.real();
      row_im += v.imag();
    }
    acc_re += nodes.w[i] * row_re;
    acc_im += nodes.w[i] * row_im;
  }
  long double scale = 2.0 * pi / nphi;  // d(cos theta) * dphi
  return {static_cast<double>(acc_re * scale), static_cast<double>(acc_im * scale)};
}

OverlapReport overlap_matrix_numeric(int n, QuadratureRule rule) {
  OverlapReport report;
  report.n = n;
  int size = n + 1;
  auto [idx_I, idx_II] = enumerate_rung(n);
  auto nodes = gauss_legendre_01(rule.order);
  int nphi = trapezoid_points(rule);

  std::vector<std::vector<long double>> acc_re(size, std::vector<long double>(size, 0.0L));
  std::vector<std::vector<long double>> acc_im(size, std::vector<long double>(size, 0.0L));
  std::vector<std::complex<double>> ups_I(size);
  std::vector<double> ups_II(size);

  for (int i = 0; i < rule.order; ++i) {
    double ct = nodes.x[i];
    double theta = std::acos(std::min(1.0, ct));
    for (int j = 0; j < nphi; ++j) {
      double phi = -pi + 2.0 * pi * j / nphi;
      AnglesI aI{theta, phi};
      AnglesII aII = sphere_to_anglesII(anglesI_to_sphere(aI));
      for (int c = 0; c < size; ++c) ups_I[c] = upsilon_I(idx_I[c], aI);
      for (int r = 0; r < size; ++r) ups_II[r] = upsilon_II(idx_II[r], aII);
      double w = nodes.w[i];
      for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) {
          std::complex<double> v = std::conj(ups_I[c]) * ups_II[r];
          acc_re[r][c] += w * v.real();
          acc_im[r][c] += w * v.imag();
        }
    }
  }

  auto w_exact = w_matrix(n);
  report.numeric.assign(size, std::vector<std::complex<double>>(size));
  report.exact.assign(size, std::vector<std::complex<double>>(size));
  long double scale = 2.0 * pi / nphi;
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      report.numeric[r][c] = {static_cast<double>(acc_re[r][c] * scale),
                              static_cast<double>(acc_im[r][c] * scale)};
      report.exact[r][c] = w_exact.at(r, c).to_complex();
      report.max_abs_error =
          std::max(report.max_abs_error, std::abs(report.numeric[r][c] - report.exact[r][c]));
    }
  return report;
}

std::complex<double> fourier_integral_numeric(int lambda, int nu, int m) {
  if (lambda < 0 || nu < 0) throw std::invalid_argument("fourier_integral_numeric: negative degree");
  int npts = 4 * (lambda + nu + std::abs(m)) + 64;
  long double acc_re = 0.0L, acc_im = 0.0L;
  for (int j = 0; j < npts; ++j) {
    double phi = -pi + 2.0 * pi * j / npts;
    double s = std::sin(phi);
    double base = 1.0;
    for (int k = 0; k < lambda; ++k) base *= s;
    double v = base * gegenbauer_eval(nu, lambda + 1, std::cos(phi));
    acc_re += v * std::cos(m * phi);
    acc_im -= v * std::sin(m * phi);
  }
  long double scale = 2.0 * pi / npts;
  return {static_cast<double>(acc_re * scale), static_cast<double>(acc_im * scale)};
}

std::complex<double> FourierExact::value() const {
  return over_two_pi.to_complex() * (2.0 * pi);
}

FourierExact fourier_integral_series(int lambda, int nu, int m) {
  if (lambda < 0 || nu < 0) throw std::invalid_argument("fourier_integral_series: negative degree");
  if ((lambda + nu + m) % 2 != 0) return {};
  // collapse: exponent (lambda-2k) - (nu-2l) - m = 0 picks l = k + (nu-lambda+m)/2
  int shift = (nu - lambda + m) / 2;
  BigRational sum = 0;
  for (int k = 0; k <= lambda; ++k) {
    int l = k + shift;
    if (l < 0 || l > nu) continue;
    BigRational g(factorial(lambda + l) * factorial(lambda + nu - l),
                  factorial(l) * factorial(nu - l) * factorial(lambda) * factorial(lambda));
    sum += (k % 2 ? -g : g) * BigRational(binomial(lambda, k));
  }
  sum /= BigRational(BigInt(1) << lambda);
  return {ExactComplex(QuarterPhase(-lambda), SignedSqrtRational::of_rational(sum))};
}

FourierExact fourier_integral_closed_form(int lambda, int nu, int m) {
  if (lambda < 0 || nu < 0)
    throw std::invalid_argument("fourier_integral_closed_form: negative degree");
  if ((lambda + nu + m) % 2 != 0) return {};
  int q = (lambda + nu + m) / 2;  // third numerator parameter is -q
  int s = (lambda - nu - m) / 2;  // second denominator parameter is s + 1
  if (q < 0) return {};           // 1/q! = 0 and the terminating series stays finite

  BigRational series;
  if (s >= 0) {
    series = hyper3f2_terminating(-nu, BigRational(lambda + 1), BigRational(-q),
                                  BigRational(-lambda - nu), BigRational(s + 1)) /
             BigRational(factorial(s));
  } else {
    // fold 1/(s! (s+1)_j) -> 1/(s+j)! with reciprocal-gamma zeros for s+j < 0
    series = 0;
    BigRational outer = 1;  // (-nu)_j (lambda+1)_j (-q)_j / ((-lambda-nu)_j j!)
    for (int j = 0; j <= nu; ++j) {
      if (j > 0) {
        BigRational num = BigRational(-nu + j - 1) * BigRational(lambda + j) * BigRational(-q + j - 1);
        if (num == 0) break;
        outer *= num / (BigRational(-lambda - nu + j - 1) * BigRational(j));
      }
      if (s + j >= 0) series += outer / BigRational(factorial(s + j));
    }
  }

  BigRational coeff = BigRational(factorial(lambda + nu), factorial(nu) * factorial(q)) * series /
                      BigRational(BigInt(1) << lambda);
  if (s % 2 != 0) coeff = -coeff;
  return {ExactComplex(QuarterPhase(-lambda), SignedSqrtRational::of_rational(coeff))};
}

EigenCheck eigen_residual(IndexI idx) {
  validate(idx);
  auto pair = basis_I_cartesian(idx.n, idx.m);
  EigenCheck check;
  check.eigenvalue = idx.n * (idx.n + 2);
  BigRational ev(check.eigenvalue);
  check.residual_re = zernike_apply(pair.poly_re) + pair.poly_re * ev;
  check.residual_im = zernike_apply(pair.poly_im) + pair.poly_im * ev;
  check.exact = check.residual_re.is_zero() && check.residual_im.is_zero();
  return check;
}

EigenCheck eigen_residual(IndexII idx) {
  validate(idx);
  auto pair = basis_II_cartesian(idx.n1, idx.n2);
  EigenCheck check;
  int n = idx.rung();
  check.eigenvalue = n * (n + 2);
  check.residual_re = zernike_apply(pair.poly_re) + pair.poly_re * BigRational(check.eigenvalue);
  check.exact = check.residual_re.is_zero();
  return check;
}

}  // namespace zernike
