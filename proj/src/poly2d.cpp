#include "zernike/poly2d.hpp"

#include <cstdlib>
#include <vector>

namespace zernike {

BivariatePoly BivariatePoly::constant(BigRational c) {
  BivariatePoly p;
  p.add_term(0, 0, c);
  return p;
}

BivariatePoly BivariatePoly::monomial(int i, int j, BigRational c) {
  BivariatePoly p;
  p.add_term(i, j, c);
  return p;
}

int BivariatePoly::degree() const {
  int d = -1;
  for (const auto& [key, c] : coeffs_) d = std::max(d, key.first + key.second);
  return d;
}

BigRational BivariatePoly::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? BigRational(0) : it->second;
}

void BivariatePoly::add_term(int i, int j, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [key, c] : o.coeffs_) add_term(key.first, key.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [key, c] : o.coeffs_) add_term(key.first, key.second, -c);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BigRational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [key, c] : coeffs_) c *= s;
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BivariatePoly zernike_apply(const BivariatePoly& p) {
  // On a monomial x^i y^j of total degree d the radial parts act as scalars:
  // (r.grad) x^i y^j = d x^i y^j, so the operator is Laplacian - d(d+2).
  BivariatePoly r;
  for (const auto& [key, c] : p.coeffs()) {
    auto [i, j] = key;
    int d = i + j;
    if (i >= 2) r.add_term(i - 2, j, c * BigRational(i * (i - 1)));
    if (j >= 2) r.add_term(i, j - 2, c * BigRational(j * (j - 1)));
    r.add_term(i, j, -c * BigRational(d * (d + 2)));
  }
  return r;
}

namespace {

// Coefficients (ascending in u) of P_t^{(a,0)}(1 - 2u) as a polynomial in u,
// from the explicit binomial expansion.
std::vector<BigRational> jacobi_shifted_u_coeffs(int t, int a) {
  std::vector<BigRational> c(static_cast<size_t>(t) + 1, BigRational(0));
  for (int s = 0; s <= t; ++s) {
    BigRational base((s % 2 == t % 2 ? 1 : -1) * binomial(t + a, s) * binomial(t, s));
    for (int w = 0; w <= s; ++w)
      c[static_cast<size_t>(t - s + w)] += (w % 2 ? -base : base) * BigRational(binomial(s, w));
  }
  return c;
}

}  // namespace

NormalizedPolyPair basis_I_cartesian(int n, int m) {
  int am = std::abs(m);
  if (n < am || (n - am) % 2 != 0)
    throw std::invalid_argument("basis_I_cartesian: need n >= |m| with n - |m| even");
  int nr = (n - am) / 2;

  // radial factor as a polynomial in u = x^2 + y^2, overall sign (-1)^{nr} folded in
  auto radial = jacobi_shifted_u_coeffs(nr, am);
  BivariatePoly u = BivariatePoly::monomial(2, 0, 1);
  u.add_term(0, 2, 1);
  BivariatePoly upow = BivariatePoly::constant(1);
  BivariatePoly s;
  for (size_t k = 0; k < radial.size(); ++k) {
    int sign = (nr % 2 ? -1 : 1);
    s += upow * (radial[k] * BigRational(sign));
    if (k + 1 < radial.size()) upow = upow * u;
  }

  // (x + i sgn(m) y)^{|m|} split into real and imaginary parts
  BivariatePoly are, aim;
  for (int t = 0; t <= am; ++t) {
    BigRational c(binomial(am, t));
    if (t % 2 == 0)
      are.add_term(am - t, t, (t / 2 % 2 ? -c : c));
    else
      aim.add_term(am - t, t, ((t - 1) / 2 % 2 ? -c : c));
  }
  if (m < 0) aim *= BigRational(-1);

  NormalizedPolyPair out;
  out.poly_re = s * are;
  out.poly_im = s * aim;
  out.norm_factor_squared = BigRational(n + 1);
  out.pi_power = -1;
  return out;
}

NormalizedPolyPair basis_II_cartesian(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("basis_II_cartesian: negative degree");

  // (1-x^2)^{n1/2} P_{n1}(y / sqrt(1-x^2)) = sum_k p_k y^{n1-2k} (1-x^2)^k
  BivariatePoly one_minus_x2 = BivariatePoly::constant(1);
  one_minus_x2.add_term(2, 0, -1);
  BivariatePoly leg;
  {
    BivariatePoly wpow = BivariatePoly::constant(1);
    std::vector<BivariatePoly> wpows;
    for (int k = 0; 2 * k <= n1; ++k) {
      wpows.push_back(wpow);
      wpow = wpow * one_minus_x2;
    }
    BigRational half_pow(1, BigInt(1) << n1);
    for (int k = 0; 2 * k <= n1; ++k) {
      BigRational pk = BigRational(binomial(n1, k) * binomial(2 * n1 - 2 * k, n1)) * half_pow;
      if (k % 2) pk = -pk;
      leg += wpows[static_cast<size_t>(k)] * BivariatePoly::monomial(0, n1 - 2 * k, pk);
    }
  }

  // Gegenbauer C^{n1+1}_{n2}(x)
  BivariatePoly geg;
  int lambda = n1 + 1;
  for (int k = 0; 2 * k <= n2; ++k) {
    BigInt poch = 1;
    for (int i = 0; i < n2 - k; ++i) poch *= (lambda + i);
    BigRational c = BigRational(poch, factorial(k) * factorial(n2 - 2 * k)) *
                    BigRational(BigInt(1) << (n2 - 2 * k));
    geg.add_term(n2 - 2 * k, 0, k % 2 ? -c : c);
  }

  NormalizedPolyPair out;
  out.poly_re = leg * geg;
  out.poly_im = BivariatePoly();
  out.norm_factor_squared = basis_II_norm_squared(n1, n2);
  out.pi_power = -1;
  return out;
}

BigRational basis_II_norm_squared(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("basis_II_norm_squared: negative degree");
  return BigRational(pow(BigInt(4), n1) * factorial(n1) * factorial(n1) * (2 * n1 + 1) *
                         (n1 + n2 + 1) * factorial(n2),
                     factorial(2 * n1 + n2 + 1));
}

}  // namespace zernike
