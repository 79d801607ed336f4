#pragma once

#include "zernike/exact.hpp"

#include <variant>

namespace zernike {

// Forward three-term recurrences, valid for the integer parameter ranges used
// here (a = |m| >= 0, b = 0, lambda = n1+1 >= 1) on [-1,1]. T is double or
// BigRational; rational inputs evaluate exactly.

template <typename T>
T jacobi_eval(int n, int a, int b, const T& x) {
  if (n == 0) return T(1);
  T pm1(1);
  T p = (T(a + b + 2) * x + T(a - b)) / T(2);
  for (int k = 2; k <= n; ++k) {
    int s = 2 * k + a + b;
    T next = (T(s - 1) * (T(s) * T(s - 2) * x + T(a * a - b * b)) * p -
              T(2 * (k + a - 1)) * T(k + b - 1) * T(s) * pm1) /
             (T(2 * k) * T(k + a + b) * T(s - 2));
    pm1 = p;
    p = next;
  }
  return p;
}

template <typename T>
T gegenbauer_eval(int n, int lambda, const T& x) {
  if (n == 0) return T(1);
  T cm1(1);
  T c = T(2 * lambda) * x;
  for (int k = 2; k <= n; ++k) {
    T next = (T(2 * (k + lambda - 1)) * x * c - T(k + 2 * lambda - 2) * cm1) / T(k);
    cm1 = c;
    c = next;
  }
  return c;
}

template <typename T>
T legendre_eval(int n, const T& x) {
  if (n == 0) return T(1);
  T pm1(1);
  T p = x;
  for (int k = 2; k <= n; ++k) {
    T next = (T(2 * k - 1) * x * p - T(k - 1) * pm1) / T(k);
    pm1 = p;
    p = next;
  }
  return p;
}

template <typename T>
T chebyshev_u_eval(int n, const T& x) {
  if (n == 0) return T(1);
  T um1(1);
  T u = T(2) * x;
  for (int k = 2; k <= n; ++k) {
    T next = T(2) * x * u - um1;
    um1 = u;
    u = next;
  }
  return u;
}

struct Jacobi {
  int a = 0;
  int b = 0;
};
struct Gegenbauer {
  int lambda = 1;
};
struct Legendre {};
struct ChebyshevU {};

using PolyFamily = std::variant<Jacobi, Gegenbauer, Legendre, ChebyshevU>;

template <typename T>
T family_eval(const PolyFamily& f, int n, const T& x) {
  return std::visit(
      [&](auto&& tag) -> T {
        using Tag = std::decay_t<decltype(tag)>;
        if constexpr (std::is_same_v<Tag, Jacobi>)
          return jacobi_eval(n, tag.a, tag.b, x);
        else if constexpr (std::is_same_v<Tag, Gegenbauer>)
          return gegenbauer_eval(n, tag.lambda, x);
        else if constexpr (std::is_same_v<Tag, Legendre>)
          return legendre_eval(n, x);
        else
          return chebyshev_u_eval(n, x);
      },
      f);
}

}  // namespace zernike
