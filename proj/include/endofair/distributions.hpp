#pragma once

#include <string>

namespace endofair {

/**
 * Standardized signal noise density. All four families have full support,
 * strictly log-concave densities, and analytic cdf/quantile pairs.
 *
 * The two-piece normal glues half-normals with scales sigma_left/sigma_right
 * at "mode"; its log-density is piecewise quadratic with a continuous
 * derivative, so it stays log-concave while being deliberately skewed.
 */
class BaseDensity {
 public:
  enum class Family { normal, logistic, gumbel, two_piece_normal };

  static BaseDensity normal();
  static BaseDensity logistic();
  static BaseDensity gumbel();
  static BaseDensity two_piece_normal(double mode, double sigma_left, double sigma_right);

  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;  // p in (0,1)

  Family family() const { return family_; }
  bool symmetric() const;
  std::string name() const;

  double mode() const { return mode_; }
  double sigma_left() const { return sigma_left_; }
  double sigma_right() const { return sigma_right_; }

  bool operator==(const BaseDensity& other) const;

 private:
  explicit BaseDensity(Family family, double mode = 0.0, double sl = 1.0, double sr = 1.0)
      : family_(family), mode_(mode), sigma_left_(sl), sigma_right_(sr) {}

  Family family_;
  double mode_;        // two-piece only
  double sigma_left_;  // two-piece only
  double sigma_right_;
};

}  // namespace endofair
