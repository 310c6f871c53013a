#pragma once

#include <cstddef>
#include <string>

namespace endofair {

enum class Curvature { convex, concave, linear, mixed };

/**
 * Survivor function H of the private-benefit distribution: H(d) is the share
 * of a group that still prefers the regulated act when facing deterrence d.
 * Non-increasing with H(-inf) = 1 and H(+inf) = 0.
 *
 * power(mu, p) is flat at 1 up to mu, equals (1 - (x - mu))^p on [mu, mu+1]
 * and 0 beyond, giving exactly controllable curvature via p.
 */
class SurvivorFunction {
 public:
  enum class Family { normal, logistic, power };

  static SurvivorFunction normal(double mu, double scale);
  static SurvivorFunction logistic(double mu, double scale);
  static SurvivorFunction power(double mu, double p);

  double value(double x) const;
  double operator()(double x) const { return value(x); }

  // Preimage of c on the decreasing span. Throws InfeasibleError when c is
  // outside the attainable image.
  double inverse(double c) const;

  // Window outside which H is numerically indistinguishable from 0 or 1.
  double effective_lo() const;
  double effective_hi() const;

  // Strictly decreasing span (identical to the effective window except for
  // the power family, whose flanks are exactly flat).
  double span_lo() const;
  double span_hi() const;

  // Sign of H'' over [a, b], used by the inspection-intensity analysis.
  Curvature curvature_on(double a, double b) const;

  Family family() const { return family_; }
  double mu() const { return mu_; }
  double scale() const { return param_; }
  double power_exponent() const { return param_; }
  std::string name() const;

  bool operator==(const SurvivorFunction& other) const;

 private:
  SurvivorFunction(Family family, double mu, double param)
      : family_(family), mu_(mu), param_(param) {}

  Family family_;
  double mu_;
  double param_;  // scale for normal/logistic, exponent for power
};

// True when high(x) >= low(x) - 1e-12 across both effective windows, i.e.
// "high" first-order stochastically dominates "low" (a riskier population).
bool fosd_check(const SurvivorFunction& low, const SurvivorFunction& high,
                std::size_t grid_size = 2048);

}  // namespace endofair
