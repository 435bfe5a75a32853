#include "steiner/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "steiner/errors.hpp"

namespace steiner::specfun {

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  }
  // lgamma_r does not touch the global signgam.
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double erf(double x) { return std::erf(x); }

double erfc(double x) { return std::erfc(x); }

double log_half_erfc_neg(double x) {
  if (x > -1.0) return std::log1p(-0.5 * std::erfc(x));
  return std::log(0.5 * std::erfc(-x));
}

double log_unit_ball_volume(int l) {
  if (l < 0) throw DomainError("unit_ball_volume: negative dimension");
  return 0.5 * l * std::log(std::numbers::pi) - log_gamma(0.5 * l + 1.0);
}

double unit_ball_volume(int l) {
  // Small dimensions are exact enough directly and avoid exp(log) rounding.
  switch (l) {
    case 0: return 1.0;
    case 1: return 2.0;
    case 2: return std::numbers::pi;
    default: return std::exp(log_unit_ball_volume(l));
  }
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  return log_gamma(n + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

JensenTable::JensenTable(int n) : n_(n) {
  if (n < 1) throw DomainError("jensen_multipliers: n must be >= 1");
  values_.resize(n + 1);
  logs_.resize(n + 1);
  values_[0] = 1.0;
  logs_[0] = 0.0;
  for (int l = 1; l <= n; ++l) {
    const double factor = 1.0 - static_cast<double>(l - 1) / n;
    values_[l] = values_[l - 1] * factor;
    logs_[l] = logs_[l - 1] + std::log1p(-static_cast<double>(l - 1) / n);
  }
}

double JensenTable::operator()(int l) const {
  if (l < 0) throw DomainError("JensenTable: negative index");
  return l > n_ ? 0.0 : values_[l];
}

double JensenTable::log_value(int l) const {
  if (l < 0) throw DomainError("JensenTable: negative index");
  return l > n_ ? -std::numeric_limits<double>::infinity() : logs_[l];
}

JensenTable jensen_multipliers(int n) { return JensenTable(n); }

double log_jensen(int n, int l) {
  if (n < 1 || l < 0) throw DomainError("log_jensen: invalid (n, l)");
  if (l > n) return -std::numeric_limits<double>::infinity();
  double s = 0.0;
  for (int r = 1; r < l; ++r) s += std::log1p(-static_cast<double>(r) / n);
  return s;
}

}  // namespace steiner::specfun
