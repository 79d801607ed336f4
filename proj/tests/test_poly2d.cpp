#include "doctest.h"
#include "zernike/poly2d.hpp"
#include "zernike/special_poly.hpp"

using namespace zernike;

TEST_CASE("poly basics") {
  BivariatePoly p = BivariatePoly::monomial(2, 0, 1);
  p.add_term(0, 2, 1);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(2, 0) == 1);
  CHECK(p.coeff(1, 1) == 0);
  CHECK(poly_eval(p, BigRational(3, 5), BigRational(4, 5)) == 1);
  CHECK(poly_eval(BivariatePoly(), BigRational(7), BigRational(-2)) == 0);
  CHECK(BivariatePoly().degree() == -1);

  // cancellation removes storage
  BivariatePoly q = p;
  q.add_term(2, 0, -1);
  CHECK(q.coeff(2, 0) == 0);
  CHECK(q.coeffs().size() == 1);

  BivariatePoly prod = p * p;
  CHECK(prod.coeff(2, 2) == 2);
  CHECK(prod.degree() == 4);
}

TEST_CASE("zernike_apply examples") {
  CHECK(zernike_apply(BivariatePoly::constant(1)).is_zero());

  BivariatePoly x = BivariatePoly::monomial(1, 0, 1);
  CHECK(zernike_apply(x) == x * BigRational(-3));

  // hand expansion: the (2,0) polynomial content is 2x^2 + 2y^2 - 1
  BivariatePoly p = BivariatePoly::monomial(2, 0, 2);
  p.add_term(0, 2, 2);
  p.add_term(0, 0, -1);
  CHECK(basis_I_cartesian(2, 0).poly_re == p);
  CHECK(zernike_apply(p) == p * BigRational(-8));
}

TEST_CASE("basis_I_cartesian examples") {
  auto z00 = basis_I_cartesian(0, 0);
  CHECK(z00.poly_re == BivariatePoly::constant(1));
  CHECK(z00.poly_im.is_zero());
  CHECK(z00.norm_factor_squared == 1);
  CHECK(z00.pi_power == -1);

  auto z11 = basis_I_cartesian(1, 1);
  CHECK(z11.poly_re == BivariatePoly::monomial(1, 0, 1));
  CHECK(z11.poly_im == BivariatePoly::monomial(0, 1, 1));
  CHECK(z11.norm_factor_squared == 2);

  auto z1m1 = basis_I_cartesian(1, -1);
  CHECK(z1m1.poly_re == BivariatePoly::monomial(1, 0, 1));
  CHECK(z1m1.poly_im == BivariatePoly::monomial(0, 1, -1));

  for (int n = 1; n <= 8; ++n)
    for (int m = -n; m <= n; m += 2) {
      if (m == 0) continue;
      auto z = basis_I_cartesian(n, m);
      CHECK(poly_eval(z.poly_re, BigRational(0), BigRational(0)) == 0);
      CHECK(poly_eval(z.poly_im, BigRational(0), BigRational(0)) == 0);
    }

  CHECK_THROWS_AS(basis_I_cartesian(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(basis_I_cartesian(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(basis_I_cartesian(-1, 1), std::invalid_argument);
}

TEST_CASE("basis_II_cartesian examples") {
  auto b00 = basis_II_cartesian(0, 0);
  CHECK(b00.poly_re == BivariatePoly::constant(1));
  CHECK(b00.poly_im.is_zero());
  CHECK(b00.norm_factor_squared == 1);
  CHECK(b00.pi_power == -1);

  auto b10 = basis_II_cartesian(1, 0);
  CHECK(b10.poly_re == BivariatePoly::monomial(0, 1, 1));
  CHECK(b10.norm_factor_squared == 4);
  CHECK(poly_eval(b10.poly_re, 0.2, 0.3) == 0.3);

  // (0, n2) rows depend on x alone and are proportional to the degree-n2
  // Chebyshev-U polynomial (here: exactly equal, constant 1 leading structure)
  for (int n2 = 0; n2 <= 12; ++n2) {
    auto b = basis_II_cartesian(0, n2);
    for (const auto& [key, c] : b.poly_re.coeffs()) CHECK(key.second == 0);
    for (int i = -5; i <= 5; ++i) {
      BigRational x(i, 7);
      CHECK(poly_eval(b.poly_re, x, BigRational(9, 11)) == chebyshev_u_eval(n2, x));
    }
  }

  CHECK_THROWS_AS(basis_II_cartesian(-1, 0), std::invalid_argument);
}

TEST_CASE("exact eigenvalue property, basis I") {
  for (int n = 0; n <= 12; ++n)
    for (int m = -n; m <= n; m += 2) {
      auto z = basis_I_cartesian(n, m);
      BigRational ev(-n * (n + 2));
      CHECK(zernike_apply(z.poly_re) == z.poly_re * ev);
      CHECK(zernike_apply(z.poly_im) == z.poly_im * ev);
    }
}

TEST_CASE("exact eigenvalue property, basis II") {
  for (int n = 0; n <= 12; ++n)
    for (int n1 = 0; n1 <= n; ++n1) {
      auto b = basis_II_cartesian(n1, n - n1);
      BigRational ev(-n * (n + 2));
      CHECK(zernike_apply(b.poly_re) == b.poly_re * ev);
    }
}

TEST_CASE("parity and degree") {
  for (int n1 = 0; n1 <= 9; ++n1)
    for (int n2 = 0; n2 + n1 <= 12; ++n2) {
      auto b = basis_II_cartesian(n1, n2);
      for (const auto& [key, c] : b.poly_re.coeffs()) {
        CHECK(key.second % 2 == n1 % 2);
        CHECK(key.first % 2 == n2 % 2);
      }
      CHECK(b.poly_re.degree() == n1 + n2);
    }
  for (int n = 0; n <= 12; ++n)
    for (int m = -n; m <= n; m += 2) {
      auto z = basis_I_cartesian(n, m);
      CHECK(std::max(z.poly_re.degree(), z.poly_im.degree()) == n);
    }
}
