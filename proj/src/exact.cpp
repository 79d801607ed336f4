#include "zernike/exact.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cfloat>
#include <deque>
#include <mutex>

namespace zernike {
namespace {

// deque keeps references stable while the table grows.
std::mutex g_factorial_mutex;
std::deque<BigInt> g_factorials{BigInt(1)};
int g_factorial_cap = 512;

using Float50 = boost::multiprecision::cpp_bin_float_50;

}  // namespace

const BigInt& factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  std::lock_guard<std::mutex> lock(g_factorial_mutex);
  if (n > g_factorial_cap)
    throw std::length_error("factorial: argument exceeds cap (see set_factorial_cap)");
  while (static_cast<int>(g_factorials.size()) <= n) {
    int k = static_cast<int>(g_factorials.size());
    g_factorials.push_back(g_factorials.back() * k);
  }
  return g_factorials[static_cast<size_t>(n)];
}

int factorial_cap() {
  std::lock_guard<std::mutex> lock(g_factorial_mutex);
  return g_factorial_cap;
}

void set_factorial_cap(int cap) {
  std::lock_guard<std::mutex> lock(g_factorial_mutex);
  if (cap > g_factorial_cap) g_factorial_cap = cap;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

double to_double(const BigRational& q) {
  Float50 v(q);
  if (abs(v) > Float50(DBL_MAX))
    throw std::overflow_error("to_double: value exceeds double range");
  return v.convert_to<double>();
}

bool is_perfect_square(const BigRational& q, BigRational* root) {
  if (q < 0) return false;
  BigInt num = numerator(q), den = denominator(q);
  BigInt rn = boost::multiprecision::sqrt(num);
  if (rn * rn != num) return false;
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rd * rd != den) return false;
  if (root) *root = BigRational(rn, rd);
  return true;
}

SignedSqrtRational::SignedSqrtRational(int sign, BigRational radicand) {
  if (radicand < 0) throw std::domain_error("SignedSqrtRational: negative radicand");
  if (sign == 0 || radicand == 0) return;  // stays zero
  if (sign != 1 && sign != -1) throw std::domain_error("SignedSqrtRational: sign must be -1, 0, +1");
  sign_ = sign;
  radicand_ = std::move(radicand);
}

SignedSqrtRational SignedSqrtRational::sqrt_of(BigRational r) {
  return SignedSqrtRational(1, std::move(r));
}

SignedSqrtRational SignedSqrtRational::of_rational(const BigRational& q) {
  int s = q == 0 ? 0 : (q > 0 ? 1 : -1);
  return SignedSqrtRational(s, q * q);
}

SignedSqrtRational SignedSqrtRational::operator-() const {
  SignedSqrtRational r = *this;
  r.sign_ = -r.sign_;
  return r;
}

SignedSqrtRational operator*(const SignedSqrtRational& a, const SignedSqrtRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return SignedSqrtRational(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
}

double SignedSqrtRational::to_double() const {
  if (sign_ == 0) return 0.0;
  Float50 v = sqrt(Float50(radicand_));
  if (v > Float50(DBL_MAX)) throw std::overflow_error("SignedSqrtRational: value exceeds double range");
  return sign_ * v.convert_to<double>();
}

SignedSqrtRational ssr_mul(const SignedSqrtRational& a, const SignedSqrtRational& b) {
  return a * b;
}

double ssr_to_float(const SignedSqrtRational& a) { return a.to_double(); }

BigRational ssr_sum_of_squares(std::span<const SignedSqrtRational> values) {
  BigRational acc = 0;
  for (const auto& v : values) acc += v.squared();
  return acc;
}

SignedSqrtRational ssr_sum_same_class(std::span<const SignedSqrtRational> values) {
  // Pick the first nonzero term as pivot p; every other term t must satisfy
  // t.radicand / p.radicand = (rational)^2, so t = ratio * p exactly and the
  // sum collapses to (sum of rationals) * p.
  const SignedSqrtRational* pivot = nullptr;
  for (const auto& v : values) {
    if (!v.is_zero()) { pivot = &v; break; }
  }
  if (!pivot) return {};
  BigRational coeff = 0;
  for (const auto& v : values) {
    if (v.is_zero()) continue;
    BigRational ratio_sq = v.radicand() / pivot->radicand();
    BigRational ratio;
    if (!is_perfect_square(ratio_sq, &ratio))
      throw std::domain_error("ssr_sum_same_class: radicands not in one square class");
    coeff += v.sign() * ratio;
  }
  return SignedSqrtRational::of_rational(coeff) * SignedSqrtRational(pivot->sign(), pivot->radicand());
}

ExactComplex::ExactComplex(QuarterPhase phase, SignedSqrtRational magnitude) {
  if (magnitude.is_zero()) return;  // canonical zero: phase k=0
  if (magnitude.sign() < 0) {
    phase_ = phase * QuarterPhase(2);
    magnitude_ = -magnitude;
  } else {
    phase_ = phase;
    magnitude_ = std::move(magnitude);
  }
}

std::complex<double> ExactComplex::to_complex() const {
  return phase_.to_complex() * magnitude_.to_double();
}

ExactComplex exact_complex_collinear_sum(std::span<const ExactComplex> terms) {
  const ExactComplex* pivot = nullptr;
  for (const auto& t : terms) {
    if (!t.is_zero()) { pivot = &t; break; }
  }
  if (!pivot) return {};
  std::vector<SignedSqrtRational> mags;
  mags.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    int dk = t.phase().k() - pivot->phase().k();
    if (dk % 2 != 0)
      throw std::domain_error("exact_complex_collinear_sum: phases differ by odd power of i");
    SignedSqrtRational m = t.magnitude();
    mags.push_back((((dk % 4) + 4) % 4 == 2) ? -m : m);
  }
  return ExactComplex(pivot->phase(), ssr_sum_same_class(mags));
}

}  // namespace zernike
