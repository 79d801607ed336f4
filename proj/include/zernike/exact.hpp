#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace zernike {

// Arbitrary-precision integers and reduced rationals. cpp_rational keeps the
// canonical form we rely on everywhere: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

/// n! from a process-wide memoized table. Thread-safe. Throws std::domain_error
/// for n < 0 and std::length_error past the cap.
const BigInt& factorial(int n);

/// Current factorial table cap (default 512).
int factorial_cap();

/// Raise (never lower) the factorial table cap.
void set_factorial_cap(int cap);

BigInt binomial(int n, int k);

/// Round a rational to the nearest double through a 50-digit binary float
/// intermediate. Throws std::overflow_error if the magnitude exceeds double range.
double to_double(const BigRational& q);

/// True iff q is the square of a rational; on success *root is the nonnegative root.
bool is_perfect_square(const BigRational& q, BigRational* root);

/// i^k with k canonicalized to {0,1,2,3}.
class QuarterPhase {
 public:
  constexpr QuarterPhase() = default;
  constexpr explicit QuarterPhase(int k) : k_(((k % 4) + 4) % 4) {}

  constexpr int k() const { return k_; }
  constexpr QuarterPhase conjugate() const { return QuarterPhase(-k_); }
  constexpr bool is_real() const { return k_ == 0 || k_ == 2; }

  std::complex<double> to_complex() const {
    switch (k_) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }

  friend constexpr QuarterPhase operator*(QuarterPhase a, QuarterPhase b) {
    return QuarterPhase(a.k_ + b.k_);
  }
  friend constexpr bool operator==(QuarterPhase a, QuarterPhase b) = default;

 private:
  int k_ = 0;
};

/// Exact value sign * sqrt(radicand) with radicand a reduced nonnegative rational.
/// Closed under multiplication; sums are only defined through squares
/// (ssr_sum_of_squares) or within one square class (ssr_sum_same_class).
class SignedSqrtRational {
 public:
  SignedSqrtRational() = default;  // zero

  SignedSqrtRational(int sign, BigRational radicand);

  /// +sqrt(r), r >= 0.
  static SignedSqrtRational sqrt_of(BigRational r);

  /// Embed a rational exactly: sign(q) * sqrt(q^2).
  static SignedSqrtRational of_rational(const BigRational& q);

  static SignedSqrtRational zero() { return {}; }
  static SignedSqrtRational one() { return SignedSqrtRational(1, 1); }

  int sign() const { return sign_; }
  const BigRational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// The represented value squared (= radicand when nonzero).
  BigRational squared() const { return sign_ == 0 ? BigRational(0) : radicand_; }

  SignedSqrtRational operator-() const;
  friend SignedSqrtRational operator*(const SignedSqrtRational& a, const SignedSqrtRational& b);
  friend bool operator==(const SignedSqrtRational& a, const SignedSqrtRational& b) = default;

  double to_double() const;

 private:
  int sign_ = 0;
  BigRational radicand_ = 0;
};

SignedSqrtRational ssr_mul(const SignedSqrtRational& a, const SignedSqrtRational& b);
double ssr_to_float(const SignedSqrtRational& a);

/// Sum of squares of the values, exact.
BigRational ssr_sum_of_squares(std::span<const SignedSqrtRational> values);

/// Exact sum of values whose radicands all lie in one square class (pairwise
/// ratios are perfect rational squares). Throws std::domain_error otherwise.
SignedSqrtRational ssr_sum_same_class(std::span<const SignedSqrtRational> values);

/// i^k * m with m a sign-free magnitude: construction folds a negative
/// magnitude sign into the phase (k -> k+2), zero is (k=0, 0).
class ExactComplex {
 public:
  ExactComplex() = default;  // zero
  ExactComplex(QuarterPhase phase, SignedSqrtRational magnitude);

  static ExactComplex one() { return ExactComplex(QuarterPhase(0), SignedSqrtRational::one()); }

  QuarterPhase phase() const { return phase_; }
  const SignedSqrtRational& magnitude() const { return magnitude_; }
  bool is_zero() const { return magnitude_.is_zero(); }

  ExactComplex conjugate() const { return ExactComplex(phase_.conjugate(), magnitude_); }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return ExactComplex(a.phase_ * b.phase_, a.magnitude_ * b.magnitude_);
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) = default;

  std::complex<double> to_complex() const;

 private:
  QuarterPhase phase_;
  SignedSqrtRational magnitude_;
};

/// Exact sum of terms whose phases agree mod 2 and whose magnitudes share one
/// square class. Throws std::domain_error if the terms are not collinear.
ExactComplex exact_complex_collinear_sum(std::span<const ExactComplex> terms);

}  // namespace zernike
