#include "endofair/survivor.hpp"

#include <algorithm>
#include <cmath>

#include "endofair/errors.hpp"
#include "endofair/math.hpp"

namespace endofair {

SurvivorFunction SurvivorFunction::normal(double mu, double scale) {
  if (!(scale > 0.0)) throw InvalidScenario("survivor normal: scale must be > 0");
  return SurvivorFunction(Family::normal, mu, scale);
}

SurvivorFunction SurvivorFunction::logistic(double mu, double scale) {
  if (!(scale > 0.0)) throw InvalidScenario("survivor logistic: scale must be > 0");
  return SurvivorFunction(Family::logistic, mu, scale);
}

SurvivorFunction SurvivorFunction::power(double mu, double p) {
  if (!(p > 0.0)) throw InvalidScenario("survivor power: exponent must be > 0");
  return SurvivorFunction(Family::power, mu, p);
}

double SurvivorFunction::value(double x) const {
  switch (family_) {
    case Family::normal:
      return math::norm_sf((x - mu_) / param_);
    case Family::logistic: {
      const double z = (x - mu_) / param_;
      return z >= 0.0 ? std::exp(-z) / (1.0 + std::exp(-z)) : 1.0 / (1.0 + std::exp(z));
    }
    case Family::power: {
      if (x <= mu_) return 1.0;
      if (x >= mu_ + 1.0) return 0.0;
      return std::pow(1.0 - (x - mu_), param_);
    }
  }
  return 0.0;
}

double SurvivorFunction::inverse(double c) const {
  switch (family_) {
    case Family::normal:
      if (!(c > 0.0 && c < 1.0))
        throw InfeasibleError("survivor inverse: level outside attainable image");
      return mu_ + param_ * math::norm_quantile(1.0 - c);
    case Family::logistic:
      if (!(c > 0.0 && c < 1.0))
        throw InfeasibleError("survivor inverse: level outside attainable image");
      return mu_ + param_ * (std::log1p(-c) - std::log(c));
    case Family::power:
      if (!(c >= 0.0 && c <= 1.0))
        throw InfeasibleError("survivor inverse: level outside attainable image");
      // c = 0 maps to the right edge of the decreasing span.
      return mu_ + 1.0 - std::pow(c, 1.0 / param_);
  }
  return 0.0;
}

double SurvivorFunction::effective_lo() const {
  switch (family_) {
    case Family::normal:
      return mu_ - 9.0 * param_;
    case Family::logistic:
      return mu_ - 21.0 * param_;
    case Family::power:
      return mu_;
  }
  return mu_;
}

double SurvivorFunction::effective_hi() const {
  switch (family_) {
    case Family::normal:
      return mu_ + 9.0 * param_;
    case Family::logistic:
      return mu_ + 21.0 * param_;
    case Family::power:
      return mu_ + 1.0;
  }
  return mu_;
}

double SurvivorFunction::span_lo() const { return effective_lo(); }

double SurvivorFunction::span_hi() const { return effective_hi(); }

Curvature SurvivorFunction::curvature_on(double a, double b) const {
  if (a > b) std::swap(a, b);
  switch (family_) {
    case Family::normal:
    case Family::logistic:
      // H'' changes sign at mu for both families.
      if (a >= mu_) return Curvature::convex;
      if (b <= mu_) return Curvature::concave;
      return Curvature::mixed;
    case Family::power:
      if (a < mu_ || b > mu_ + 1.0) return Curvature::mixed;  // touches a flat flank
      if (param_ > 1.0) return Curvature::convex;
      if (param_ < 1.0) return Curvature::concave;
      return Curvature::linear;
  }
  return Curvature::mixed;
}

std::string SurvivorFunction::name() const {
  switch (family_) {
    case Family::normal:
      return "normal";
    case Family::logistic:
      return "logistic";
    case Family::power:
      return "power";
  }
  return "?";
}

bool SurvivorFunction::operator==(const SurvivorFunction& other) const {
  return family_ == other.family_ && mu_ == other.mu_ && param_ == other.param_;
}

bool fosd_check(const SurvivorFunction& low, const SurvivorFunction& high,
                std::size_t grid_size) {
  if (grid_size < 2) grid_size = 2;
  const double lo = std::min(low.effective_lo(), high.effective_lo());
  const double hi = std::max(low.effective_hi(), high.effective_hi());
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
    if (high.value(x) < low.value(x) - 1e-12) return false;
  }
  return true;
}

}  // namespace endofair
