#include "steiner/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steiner/errors.hpp"
#include "steiner/specfun.hpp"

namespace steiner {

LimitFunction limit_for(BodyKind kind) {
  switch (kind) {
    case BodyKind::Ball:
    case BodyKind::CrossPolytope: return LimitFunction::E1;
    case BodyKind::Cube:
    case BodyKind::Simplex: return LimitFunction::E2;
  }
  throw DomainError("unsupported kind");
}

double limit_coefficient(LimitFunction f, int l) {
  if (l < 0) throw DomainError("limit_coefficient: negative index");
  const double log_fact = specfun::log_factorial(l);
  if (f == LimitFunction::E1) return std::exp(-log_fact);
  return std::exp(l * std::log(0.5 * std::sqrt(std::numbers::pi)) -
                  specfun::log_gamma(0.5 * l + 1.0) - log_fact);
}

std::complex<double> eval_limit(LimitFunction f, std::complex<double> tau, double tol) {
  if (!(tol > 0.0)) throw DomainError("eval_limit: tol must be positive");
  if (f == LimitFunction::E1) return std::exp(tau);
  const double r = std::abs(tau);
  std::complex<double> sum = 0.0;
  std::complex<double> power = 1.0;
  double majorant = 1.0;  // |τ|ˡ/l!
  for (int l = 0;; ++l) {
    sum += limit_coefficient(f, l) * power;
    power *= tau;
    majorant *= r / (l + 1);
    // Once l + 2 > 2|τ| the majorant terms at least halve, so the tail is below 2·majorant.
    if (l + 2 > 2.0 * r && 2.0 * majorant < tol) break;
    if (l > 10000) break;
  }
  return sum;
}

double sup_distance(const RenormalizedPolynomial& poly, LimitFunction f, double radius,
                    int samples) {
  if (samples < 1) throw DomainError("sup_distance: samples must be positive");
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / samples;
    const std::complex<double> tau = std::polar(radius, angle);
    worst = std::max(worst, std::abs(evaluate(poly, tau) - eval_limit(f, tau)));
  }
  return worst;
}

ConvergenceProfile convergence_profile(BodyKind kind, const std::vector<int>& dims, double radius,
                                       int samples, const QuadratureConfig& cfg) {
  if (dims.empty()) throw DomainError("convergence_profile: no dimensions given");
  if (!std::is_sorted(dims.begin(), dims.end()) ||
      std::adjacent_find(dims.begin(), dims.end()) != dims.end()) {
    throw DomainError("convergence_profile: dims must be strictly increasing");
  }
  if (dims.front() < 1) throw DomainError("convergence_profile: dims must be >= 1");
  if (!(radius >= 0.0)) throw DomainError("convergence_profile: radius must be nonnegative");
  if (samples < 64) throw DomainError("convergence_profile: need at least 64 samples");
  ConvergenceProfile profile{kind, radius, samples, dims, {}};
  const LimitFunction f = limit_for(kind);
  for (int n : dims) {
    const auto poly = renormalized(FamilyInstance{kind, n, 1.0}, cfg);
    profile.distances.push_back(sup_distance(poly, f, radius, samples));
  }
  return profile;
}

}  // namespace steiner
