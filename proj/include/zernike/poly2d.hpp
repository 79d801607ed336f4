#pragma once

#include "zernike/exact.hpp"

#include <map>
#include <utility>

namespace zernike {

/// Sparse exact polynomial in x, y: map (i,j) -> coefficient of x^i y^j.
/// Zero coefficients are never stored, so operator== is structural equality.
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, BigRational>;

  BivariatePoly() = default;

  static BivariatePoly constant(BigRational c);
  static BivariatePoly monomial(int i, int j, BigRational c);

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// max(i+j) over stored terms; -1 for the zero polynomial.
  int degree() const;

  BigRational coeff(int i, int j) const;
  void add_term(int i, int j, const BigRational& c);

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const BigRational& s);

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(BivariatePoly a, const BigRational& s) { return a *= s; }
  friend BivariatePoly operator*(const BigRational& s, BivariatePoly a) { return a *= s; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) = default;

  template <typename T>
  T eval(const T& x, const T& y) const {
    // Horner in y inside each x power, then Horner across x powers; the map's
    // lexicographic order yields terms grouped by ascending i, ascending j.
    T total(0);
    auto it = coeffs_.begin();
    int prev_i = -1;
    T xpow(1);
    bool xpow_valid = false;
    while (it != coeffs_.end()) {
      int i = it->first.first;
      // collect the y-polynomial for this i (ascending j), Horner from the top
      std::map<Key, BigRational>::const_iterator stop = it;
      while (stop != coeffs_.end() && stop->first.first == i) ++stop;
      auto rit = std::make_reverse_iterator(stop);
      auto rend = std::make_reverse_iterator(it);
      T inner(0);
      int prev_j = -1;
      for (auto r = rit; r != rend; ++r) {
        int j = r->first.second;
        if (prev_j >= 0)
          for (int q = 0; q < prev_j - j; ++q) inner = inner * y;
        inner = inner + T(r->second);
        prev_j = j;
      }
      for (int q = 0; q < prev_j; ++q) inner = inner * y;
      if (!xpow_valid) {
        for (int q = 0; q < i; ++q) xpow = xpow * x;
        xpow_valid = true;
      } else {
        for (int q = 0; q < i - prev_i; ++q) xpow = xpow * x;
      }
      total = total + xpow * inner;
      prev_i = i;
      it = stop;
    }
    return total;
  }

 private:
  Map coeffs_;
};

/// (Laplacian - (r.grad)^2 - 2 r.grad) p, exactly.
BivariatePoly zernike_apply(const BivariatePoly& p);

/// Polynomial content plus the normalization kept outside the rationals:
/// the represented function is (poly_re + i poly_im) * sqrt(norm_factor_squared * pi^pi_power).
struct NormalizedPolyPair {
  BivariatePoly poly_re;
  BivariatePoly poly_im;
  BigRational norm_factor_squared;
  int pi_power = 0;
};

/// Cartesian expansion of the disk function indexed by (n, m).
/// Requires n >= |m| and n - |m| even.
NormalizedPolyPair basis_I_cartesian(int n, int m);

/// Cartesian expansion of the disk function indexed by (n1, n2); poly_im = 0.
NormalizedPolyPair basis_II_cartesian(int n1, int n2);

/// Rational part of the squared normalization constant for (n1, n2); the full
/// square is this value divided by pi.
BigRational basis_II_norm_squared(int n1, int n2);

template <typename T>
T poly_eval(const BivariatePoly& p, const T& x, const T& y) {
  return p.eval(x, y);
}

}  // namespace zernike
