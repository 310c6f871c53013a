#include "endofair/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "endofair/errors.hpp"
#include "endofair/math.hpp"

namespace endofair {

namespace {

double logistic_cdf(double x) {
  // Split by sign to avoid overflow in exp.
  return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

double logistic_pdf(double x) {
  const double e = std::exp(-std::fabs(x));
  const double d = 1.0 + e;
  return e / (d * d);
}

}  // namespace

BaseDensity BaseDensity::normal() { return BaseDensity(Family::normal); }

BaseDensity BaseDensity::logistic() { return BaseDensity(Family::logistic); }

BaseDensity BaseDensity::gumbel() { return BaseDensity(Family::gumbel); }

BaseDensity BaseDensity::two_piece_normal(double mode, double sigma_left, double sigma_right) {
  if (!(sigma_left > 0.0) || !(sigma_right > 0.0))
    throw InvalidScenario("two_piece_normal: side scales must be > 0");
  return BaseDensity(Family::two_piece_normal, mode, sigma_left, sigma_right);
}

double BaseDensity::pdf(double x) const {
  switch (family_) {
    case Family::normal:
      return math::norm_pdf(x);
    case Family::logistic:
      return logistic_pdf(x);
    case Family::gumbel:
      return std::exp(-x - std::exp(-x));
    case Family::two_piece_normal: {
      const double norm = 2.0 * math::kInvSqrt2Pi / (sigma_left_ + sigma_right_);
      const double s = x < mode_ ? sigma_left_ : sigma_right_;
      const double z = (x - mode_) / s;
      return norm * std::exp(-0.5 * z * z);
    }
  }
  return 0.0;
}

double BaseDensity::log_pdf(double x) const {
  switch (family_) {
    case Family::normal:
      return math::log_norm_pdf(x);
    case Family::logistic: {
      const double a = std::fabs(x);
      return -a - 2.0 * std::log1p(std::exp(-a));
    }
    case Family::gumbel:
      return -x - std::exp(-x);
    case Family::two_piece_normal: {
      const double s = x < mode_ ? sigma_left_ : sigma_right_;
      const double z = (x - mode_) / s;
      return std::log(2.0 * math::kInvSqrt2Pi / (sigma_left_ + sigma_right_)) - 0.5 * z * z;
    }
  }
  return -std::numeric_limits<double>::infinity();
}

double BaseDensity::cdf(double x) const {
  switch (family_) {
    case Family::normal:
      return math::norm_cdf(x);
    case Family::logistic:
      return logistic_cdf(x);
    case Family::gumbel:
      return std::exp(-std::exp(-x));
    case Family::two_piece_normal: {
      const double total = sigma_left_ + sigma_right_;
      if (x <= mode_)
        return 2.0 * sigma_left_ / total * math::norm_cdf((x - mode_) / sigma_left_);
      return sigma_left_ / total +
             2.0 * sigma_right_ / total * (math::norm_cdf((x - mode_) / sigma_right_) - 0.5);
    }
  }
  return 0.0;
}

double BaseDensity::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("BaseDensity::quantile: p must lie in (0,1)");
  switch (family_) {
    case Family::normal:
      return math::norm_quantile(p);
    case Family::logistic:
      return std::log(p) - std::log1p(-p);
    case Family::gumbel:
      return -std::log(-std::log(p));
    case Family::two_piece_normal: {
      const double total = sigma_left_ + sigma_right_;
      const double w_left = sigma_left_ / total;
      if (p <= w_left) return mode_ + sigma_left_ * math::norm_quantile(p / (2.0 * w_left));
      return mode_ +
             sigma_right_ * math::norm_quantile(0.5 + (p - w_left) / (2.0 * (1.0 - w_left)));
    }
  }
  return 0.0;
}

bool BaseDensity::symmetric() const {
  switch (family_) {
    case Family::normal:
    case Family::logistic:
      return true;
    case Family::gumbel:
      return false;
    case Family::two_piece_normal:
      return sigma_left_ == sigma_right_;
  }
  return false;
}

std::string BaseDensity::name() const {
  switch (family_) {
    case Family::normal:
      return "normal";
    case Family::logistic:
      return "logistic";
    case Family::gumbel:
      return "gumbel";
    case Family::two_piece_normal:
      return "two_piece_normal";
  }
  return "?";
}

bool BaseDensity::operator==(const BaseDensity& other) const {
  if (family_ != other.family_) return false;
  if (family_ != Family::two_piece_normal) return true;
  return mode_ == other.mode_ && sigma_left_ == other.sigma_left_ &&
         sigma_right_ == other.sigma_right_;
}

}  // namespace endofair
