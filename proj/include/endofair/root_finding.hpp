#pragma once

#include <cmath>
#include <utility>

namespace endofair {

// Golden-section maximization on [a, b]; f need only be unimodal there.
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double xtol, int max_iter = 200) {
  constexpr double inv_gr = 0.6180339887498948482;  // 1/golden ratio
  double c = b - (b - a) * inv_gr;
  double d = a + (b - a) * inv_gr;
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_gr;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_gr;
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, double xtol, int max_iter = 200) {
  auto neg = [&f](double x) { return -f(x); };
  auto [x, v] = golden_max(neg, a, b, xtol, max_iter);
  return {x, -v};
}

// Bisection for a sign change of f on [lo, hi]; caller guarantees f(lo) and f(hi)
// have opposite (or zero) signs. Returns the midpoint of the final bracket.
template <typename F>
double bisect_root(F&& f, double lo, double hi, double xtol, int max_iter = 200) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace endofair
