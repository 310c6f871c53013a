#pragma once

// Independent numerical machinery for cross-checking the library: a normal
// CDF built from a positive power series (no erf/erfc anywhere), plain
// quadrature and bisection, plus seeded random scenario generators.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "endofair/scenario.hpp"

namespace testsupport {

// Phi(x) = 1/2 + phi(x) * (x + x^3/3 + x^5/(3*5) + ...); every term is
// positive, so there is no cancellation to worry about.
inline long double norm_cdf_series(long double x) {
  if (x < 0.0L) return 1.0L - norm_cdf_series(-x);
  if (x > 12.0L) return 1.0L;
  const long double phi = expl(-0.5L * x * x) * 0.39894228040143267793994605993438L;
  long double term = x;
  long double sum = x;
  for (int n = 1; n < 600; ++n) {
    term *= x * x / (2.0L * n + 1.0L);
    sum += term;
    if (term < 1e-22L * sum) break;
  }
  return 0.5L + phi * sum;
}

inline double norm_cdf(double x) { return static_cast<double>(norm_cdf_series(x)); }
inline double norm_sf(double x) { return static_cast<double>(1.0L - norm_cdf_series(x)); }

inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double norm_quantile(double p) {
  return bisect([p](double x) { return norm_cdf(x) - p; }, -13.0, 13.0);
}

inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(g_); }

 private:
  std::mt19937_64 g_;
};

inline endofair::BaseDensity random_base(Rng& r) {
  using endofair::BaseDensity;
  switch (r.pick(4)) {
    case 0: return BaseDensity::normal();
    case 1: return BaseDensity::logistic();
    case 2: return BaseDensity::gumbel();
    default: return BaseDensity::two_piece_normal(0.0, r.uniform(0.5, 2.0), r.uniform(0.5, 2.0));
  }
}

inline endofair::SurvivorFunction random_survivor(Rng& r) {
  using endofair::SurvivorFunction;
  switch (r.pick(3)) {
    case 0: return SurvivorFunction::normal(r.uniform(-1.0, 2.0), r.uniform(0.5, 3.0));
    case 1: return SurvivorFunction::logistic(r.uniform(-1.0, 2.0), r.uniform(0.5, 3.0));
    default: return SurvivorFunction::power(r.uniform(-0.5, 0.0), r.uniform(0.5, 3.0));
  }
}

inline endofair::SignalStructure random_signal(Rng& r, double ratio_lo = 0.5,
                                               double ratio_hi = 2.5) {
  const endofair::BaseDensity base = random_base(r);
  const double mu = r.uniform(-1.0, 1.0);
  const double sigma = r.uniform(0.5, 2.0);
  const double m = r.uniform(ratio_lo, ratio_hi) * sigma;
  return endofair::SignalStructure(base, mu, sigma, m);
}

// Both groups read the same signal technology; everything else varies.
inline endofair::Scenario identical_signal_scenario(std::uint64_t seed) {
  Rng r(seed);
  const endofair::SignalStructure sig = random_signal(r);
  endofair::Group g1{"g1", r.uniform(200.0, 3000.0), random_survivor(r), sig};
  endofair::Group g2{"g2", r.uniform(200.0, 3000.0), random_survivor(r), sig};
  return endofair::Scenario(std::move(g1), std::move(g2));
}

// Same base density, deliberately different shift-to-scale ratios.
inline endofair::Scenario location_scale_scenario(std::uint64_t seed) {
  Rng r(seed);
  const endofair::BaseDensity base = random_base(r);
  const double s1 = r.uniform(0.5, 2.0);
  const double s2 = r.uniform(0.5, 2.0);
  endofair::SignalStructure sig1(base, r.uniform(-1.0, 1.0), s1, r.uniform(0.5, 1.1) * s1);
  endofair::SignalStructure sig2(base, r.uniform(-1.0, 1.0), s2, r.uniform(1.5, 2.5) * s2);
  endofair::Group g1{"g1", r.uniform(200.0, 3000.0), random_survivor(r), std::move(sig1)};
  endofair::Group g2{"g2", r.uniform(200.0, 3000.0), random_survivor(r), std::move(sig2)};
  return endofair::Scenario(std::move(g1), std::move(g2));
}

inline endofair::Scenario generic_scenario(std::uint64_t seed) {
  Rng r(seed);
  endofair::Group g1{"g1", r.uniform(200.0, 3000.0), random_survivor(r), random_signal(r)};
  endofair::Group g2{"g2", r.uniform(200.0, 3000.0), random_survivor(r), random_signal(r)};
  return endofair::Scenario(std::move(g1), std::move(g2));
}

}  // namespace testsupport
