#pragma once

#include <cstddef>

#include "endofair/distributions.hpp"

namespace endofair {

enum class Hypothesis { innocent, crime };

struct DensityEval {
  double pdf;
  double cdf;
};

// Range of deterrence levels a threshold test can impose on one group.
// upper is attained at argmax_threshold, where the two signal densities cross.
struct DisincentiveBounds {
  double lower;
  double upper;
  double argmax_threshold;
};

/**
 * Signal technology of one group: noise drawn from a common base density,
 * shifted and scaled per group, with the crime hypothesis shifted right by
 * crime_shift. crime_shift > 0 gives the strict monotone likelihood ratio
 * property for every base family here.
 */
class SignalStructure {
 public:
  SignalStructure(BaseDensity base, double mu, double sigma, double crime_shift);

  // Skips parameter validation; exists so tests can probe broken inputs.
  static SignalStructure unchecked(BaseDensity base, double mu, double sigma, double crime_shift);

  double pdf(double s, Hypothesis h) const;
  double log_pdf(double s, Hypothesis h) const;
  double cdf(double s, Hypothesis h) const;
  double quantile(double p, Hypothesis h) const;
  DensityEval density_eval(double s, Hypothesis h) const;

  // delta(T) = F_innocent(T) - F_crime(T), the deterrence created by threshold T.
  double delta(double t) const;

  DisincentiveBounds disincentive_bounds() const;

  // True when log f_crime - log f_innocent is non-decreasing across the grid.
  bool mlrp_check(std::size_t grid_size = 512) const;

  // Widest threshold window the solvers search over.
  double span_lo(double p) const { return quantile(p, Hypothesis::innocent); }
  double span_hi(double p) const { return quantile(1.0 - p, Hypothesis::crime); }

  const BaseDensity& base() const { return base_; }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double crime_shift() const { return crime_shift_; }

  bool operator==(const SignalStructure& other) const;

 private:
  struct Raw {};
  SignalStructure(Raw, BaseDensity base, double mu, double sigma, double crime_shift);

  BaseDensity base_;
  double mu_;
  double sigma_;
  double crime_shift_;
};

}  // namespace endofair
