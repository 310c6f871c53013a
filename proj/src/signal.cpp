#include "endofair/signal.hpp"

#include <algorithm>
#include <cmath>

#include "endofair/errors.hpp"
#include "endofair/root_finding.hpp"

namespace endofair {

SignalStructure::SignalStructure(BaseDensity base, double mu, double sigma, double crime_shift)
    : SignalStructure(Raw{}, std::move(base), mu, sigma, crime_shift) {
  if (!(sigma_ > 0.0)) throw InvalidScenario("signal: sigma must be > 0");
  if (!(crime_shift_ > 0.0)) throw InvalidScenario("signal: crime_shift must be > 0");
  if (!std::isfinite(mu_)) throw InvalidScenario("signal: mu must be finite");
}

SignalStructure::SignalStructure(Raw, BaseDensity base, double mu, double sigma,
                                 double crime_shift)
    : base_(std::move(base)), mu_(mu), sigma_(sigma), crime_shift_(crime_shift) {}

SignalStructure SignalStructure::unchecked(BaseDensity base, double mu, double sigma,
                                           double crime_shift) {
  return SignalStructure(Raw{}, std::move(base), mu, sigma, crime_shift);
}

double SignalStructure::pdf(double s, Hypothesis h) const {
  const double shift = h == Hypothesis::crime ? crime_shift_ : 0.0;
  return base_.pdf((s - mu_ - shift) / sigma_) / sigma_;
}

double SignalStructure::log_pdf(double s, Hypothesis h) const {
  const double shift = h == Hypothesis::crime ? crime_shift_ : 0.0;
  return base_.log_pdf((s - mu_ - shift) / sigma_) - std::log(sigma_);
}

double SignalStructure::cdf(double s, Hypothesis h) const {
  const double shift = h == Hypothesis::crime ? crime_shift_ : 0.0;
  return base_.cdf((s - mu_ - shift) / sigma_);
}

double SignalStructure::quantile(double p, Hypothesis h) const {
  const double shift = h == Hypothesis::crime ? crime_shift_ : 0.0;
  return mu_ + shift + sigma_ * base_.quantile(p);
}

DensityEval SignalStructure::density_eval(double s, Hypothesis h) const {
  return {pdf(s, h), cdf(s, h)};
}

double SignalStructure::delta(double t) const {
  return cdf(t, Hypothesis::innocent) - cdf(t, Hypothesis::crime);
}

DisincentiveBounds SignalStructure::disincentive_bounds() const {
  const double lo = span_lo(1e-4);
  const double hi = span_hi(1e-4);
  auto [t_approx, d_approx] = golden_max([this](double t) { return delta(t); }, lo, hi, 1e-6);
  (void)d_approx;

  // delta'(t) = f_innocent(t) - f_crime(t) crosses zero exactly once; polish
  // the golden-section estimate with a sign bisection on the derivative.
  auto slope = [this](double t) { return pdf(t, Hypothesis::innocent) - pdf(t, Hypothesis::crime); };
  double a = t_approx, b = t_approx;
  double w = std::max(1e-5, (hi - lo) * 1e-6);
  while (slope(a) <= 0.0 && a > lo) a = std::max(lo, a - w), w *= 2.0;
  w = std::max(1e-5, (hi - lo) * 1e-6);
  while (slope(b) >= 0.0 && b < hi) b = std::min(hi, b + w), w *= 2.0;

  double t_star = t_approx;
  if (slope(a) > 0.0 && slope(b) < 0.0)
    t_star = bisect_root(slope, a, b, 1e-13 * std::max(1.0, std::fabs(a) + std::fabs(b)), 200);

  const double upper = delta(t_star);
  // The negative-part mass mirrors the positive part: both sides integrate
  // f_crime - f_innocent over complementary sign regions of a single crossing.
  return {-upper, upper, t_star};
}

bool SignalStructure::mlrp_check(std::size_t grid_size) const {
  if (grid_size < 3) grid_size = 3;
  const double lo = std::min(quantile(0.001, Hypothesis::innocent), quantile(0.001, Hypothesis::crime));
  const double hi = std::max(quantile(0.999, Hypothesis::innocent), quantile(0.999, Hypothesis::crime));
  double prev = log_pdf(lo, Hypothesis::crime) - log_pdf(lo, Hypothesis::innocent);
  for (std::size_t i = 1; i < grid_size; ++i) {
    const double s = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
    const double ratio = log_pdf(s, Hypothesis::crime) - log_pdf(s, Hypothesis::innocent);
    if (ratio < prev - 1e-12) return false;
    prev = ratio;
  }
  return true;
}

bool SignalStructure::operator==(const SignalStructure& other) const {
  return base_ == other.base_ && mu_ == other.mu_ && sigma_ == other.sigma_ &&
         crime_shift_ == other.crime_shift_;
}

}  // namespace endofair
