#include "zernike/interbasis.hpp"

#include <algorithm>
#include <cstdlib>

namespace zernike {

namespace {

// Pochhammer (x)_k for rational x, integer k >= 0.
BigRational pochhammer(const BigRational& x, int k) {
  BigRational p = 1;
  for (int i = 0; i < k; ++i) p *= (x + i);
  return p;
}

// 1/x! with the reciprocal-gamma convention: zero for negative integer x.
BigRational inv_factorial(int x) {
  if (x < 0) return 0;
  return BigRational(1, factorial(x));
}

}  // namespace

void validate(AngularMomentum jm) {
  if (jm.twice_j < 0 || std::abs(jm.twice_m) > jm.twice_j || (jm.twice_j + jm.twice_m) % 2 != 0)
    throw std::invalid_argument("AngularMomentum: need j >= 0, |m| <= j, j - m integer");
}

SignedSqrtRational cgc(AngularMomentum j1m1, AngularMomentum j2m2, AngularMomentum jm) {
  validate(j1m1);
  validate(j2m2);
  validate(jm);
  int J1 = j1m1.twice_j, M1 = j1m1.twice_m;
  int J2 = j2m2.twice_j, M2 = j2m2.twice_m;
  int J = jm.twice_j, M = jm.twice_m;

  if (M1 + M2 != M) return {};
  if (J > J1 + J2 || J < std::abs(J1 - J2)) return {};
  if ((J1 + J2 + J) % 2 != 0) return {};  // j1 + j2 + j must be an integer

  // doubled sums are even here, so these are true integers
  auto h = [](int doubled) { return doubled / 2; };
  int t1 = h(J1 + J2 - J), t2 = h(J1 - J2 + J), t3 = h(-J1 + J2 + J);
  int jpm = h(J + M), jmm = h(J - M);
  int j1pm1 = h(J1 + M1), j1mm1 = h(J1 - M1);
  int j2pm2 = h(J2 + M2), j2mm2 = h(J2 - M2);

  BigRational radicand =
      BigRational(J + 1) *
      BigRational(factorial(t1) * factorial(t2) * factorial(t3), factorial(h(J1 + J2 + J) + 1)) *
      BigRational(factorial(jpm) * factorial(jmm)) * BigRational(factorial(j1pm1) * factorial(j1mm1)) *
      BigRational(factorial(j2pm2) * factorial(j2mm2));

  int d1 = h(J - J2 + M1);  // j - j2 + m1
  int d2 = h(J - J1 - M2);  // j - j1 - m2
  int k_lo = std::max({0, -d1, -d2});
  int k_hi = std::min({t1, j1mm1, j2pm2});
  BigRational sum = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    BigRational term(1, factorial(k) * factorial(t1 - k) * factorial(j1mm1 - k) *
                            factorial(j2pm2 - k) * factorial(d1 + k) * factorial(d2 + k));
    sum += (k % 2 ? -term : term);
  }

  return SignedSqrtRational::of_rational(sum) * SignedSqrtRational::sqrt_of(radicand);
}

BigRational hyper3f2_terminating(int a, const BigRational& b, const BigRational& c,
                                 const BigRational& d, const BigRational& e) {
  if (a > 0) throw std::domain_error("hyper3f2_terminating: a must be a nonpositive integer");
  BigRational sum = 1, term = 1;
  for (int k = 0; k < -a; ++k) {
    BigRational num = BigRational(a + k) * (b + k) * (c + k);
    if (num == 0) break;  // a later numerator Pochhammer stays zero
    BigRational den = (d + k) * (e + k) * (k + 1);
    if (den == 0)
      throw std::domain_error("hyper3f2_terminating: denominator Pochhammer vanished");
    term *= num / den;
    sum += term;
  }
  return sum;
}

SignedSqrtRational special_cgc(int n, int m, int n1) {
  if (n < 0 || n1 < 0) throw std::invalid_argument("special_cgc: negative index");
  if (std::abs(m) > n || (n - m) % 2 != 0)
    throw std::invalid_argument("special_cgc: need |m| <= n with n - m even");
  if (n1 > n) return {};

  // gamma = n1, alpha = n/2, beta = m/2 (doubled bookkeeping keeps all
  // factorial arguments integer: n and m share parity)
  int apb = (n + m) / 2;        // alpha + beta
  int gab = n1 - apb;           // gamma - alpha - beta; e = gab + 1
  BigRational prefactor(factorial(n) * factorial(n1), factorial(apb));
  BigRational b_squared(BigInt(2 * n1 + 1), factorial(n - n1) * factorial(n + n1 + 1));

  int a = n1 - n;
  BigRational series;
  if (gab >= 0) {
    series = hyper3f2_terminating(a, BigRational(n1 + 1), BigRational(-apb), BigRational(-n),
                                  BigRational(gab + 1)) /
             BigRational(factorial(gab));
  } else {
    // 1/((gamma-alpha-beta)! (e)_k) folds to 1/(gamma-alpha-beta+k)!, which the
    // reciprocal-gamma convention zeroes until k reaches -gab
    series = 0;
    BigRational outer = 1;  // (a)_k (b)_k (c)_k / ((d)_k k!)
    for (int k = 0; k <= -a; ++k) {
      if (k > 0) {
        BigRational num = BigRational(a + k - 1) * BigRational(n1 + k) * BigRational(-apb + k - 1);
        if (num == 0) break;
        outer *= num / (BigRational(-n + k - 1) * BigRational(k));
      }
      series += outer * inv_factorial(gab + k);
    }
  }

  return SignedSqrtRational::of_rational(prefactor * series) * SignedSqrtRational::sqrt_of(b_squared);
}

ExactComplex w_coefficient(int n1, int n2, int m) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("w_coefficient: negative index");
  int n = n1 + n2;
  int sign_pow = m > 0 ? m : 0;  // (m + |m|)/2
  return ExactComplex(QuarterPhase(n1 + 2 * (sign_pow % 2)), special_cgc(n, m, n1));
}

ExactComplex w_tilde_coefficient(int n, int m, int n1) {
  if (n1 < 0 || n1 > n) throw std::invalid_argument("w_tilde_coefficient: need 0 <= n1 <= n");
  int sign_pow = m > 0 ? m : 0;
  return ExactComplex(QuarterPhase(-n1 + 2 * (sign_pow % 2)), special_cgc(n, m, n1));
}

InterbasisMatrix w_matrix(int n) {
  if (n < 0) throw std::invalid_argument("w_matrix: negative rung");
  InterbasisMatrix w;
  w.n = n;
  w.entries.resize(n + 1);
  for (int row = 0; row <= n; ++row) {
    int n1 = n - row;
    w.entries[row].reserve(n + 1);
    for (int col = 0; col <= n; ++col) {
      int m = n - 2 * col;
      w.entries[row].push_back(w_coefficient(n1, n - n1, m));
    }
  }
  return w;
}

bool w_matrix_unitary_exact(const InterbasisMatrix& w) {
  int size = w.n + 1;
  for (int r = 0; r < size; ++r) {
    std::vector<SignedSqrtRational> mags;
    mags.reserve(size);
    for (int c = 0; c < size; ++c) mags.push_back(w.entries[r][c].magnitude());
    if (ssr_sum_of_squares(mags) != 1) return false;
    for (int r2 = r + 1; r2 < size; ++r2) {
      std::vector<ExactComplex> terms;
      terms.reserve(size);
      for (int c = 0; c < size; ++c)
        terms.push_back(w.entries[r][c] * w.entries[r2][c].conjugate());
      if (!exact_complex_collinear_sum(terms).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace zernike
