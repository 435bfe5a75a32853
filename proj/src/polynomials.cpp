#include "steiner/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "steiner/errors.hpp"
#include "steiner/specfun.hpp"

namespace steiner {

namespace {

using specfun::log_factorial;
using specfun::log_gamma;
using specfun::log_jensen;
using specfun::log_unit_ball_volume;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> exp_all(const std::vector<double>& logs) {
  std::vector<double> out(logs.size());
  std::transform(logs.begin(), logs.end(), out.begin(), [](double v) { return std::exp(v); });
  return out;
}

std::vector<double> log_mu_from_log_c(int n, const std::vector<double>& log_c) {
  const specfun::JensenTable jensen(n);
  std::vector<double> log_mu(n + 1);
  for (int l = 0; l <= n; ++l) {
    log_mu[l] = log_c[l] + log_factorial(l) - jensen.log_value(l);
  }
  return log_mu;
}

}  // namespace

MinkowskiPolynomial::MinkowskiPolynomial(FamilyInstance provenance, std::vector<double> log_m)
    : provenance_(provenance), log_m_(std::move(log_m)) {
  if (log_m_.empty()) throw DomainError("MinkowskiPolynomial: no coefficients");
}

double MinkowskiPolynomial::m(int l) const { return std::exp(log_m_.at(l)); }

std::vector<double> MinkowskiPolynomial::coefficients() const { return exp_all(log_m_); }

double MinkowskiPolynomial::operator()(double t) const {
  if (t < 0.0) throw DomainError("MinkowskiPolynomial: t must be nonnegative");
  if (t == 0.0) return m(0);
  const double log_t = std::log(t);
  double peak = kNegInf;
  for (int l = 0; l <= degree(); ++l) peak = std::max(peak, log_m_[l] + l * log_t);
  double sum = 0.0;
  for (int l = 0; l <= degree(); ++l) sum += std::exp(log_m_[l] + l * log_t - peak);
  return std::exp(peak) * sum;
}

RenormalizedPolynomial::RenormalizedPolynomial(FamilyInstance provenance,
                                               std::vector<double> log_c,
                                               std::vector<double> log_mu)
    : provenance_(provenance), log_c_(std::move(log_c)), log_mu_(std::move(log_mu)) {
  if (log_c_.empty() || log_c_.size() != log_mu_.size()) {
    throw DomainError("RenormalizedPolynomial: coefficient and mu lengths differ");
  }
}

RenormalizedPolynomial RenormalizedPolynomial::from_mu(FamilyInstance provenance,
                                                       const std::vector<double>& mu) {
  if (mu.empty()) throw DomainError("from_mu: empty mu sequence");
  const int n = static_cast<int>(mu.size()) - 1;
  std::vector<double> log_mu(mu.size());
  std::vector<double> log_c(mu.size());
  for (int l = 0; l <= n; ++l) {
    if (!(mu[l] > 0.0)) throw DomainError("from_mu: mu entries must be positive");
    log_mu[l] = std::log(mu[l]);
    log_c[l] = log_mu[l] + (n >= 1 ? log_jensen(n, l) : 0.0) - log_factorial(l);
  }
  provenance.n = std::max(n, 1);
  return RenormalizedPolynomial(provenance, std::move(log_c), std::move(log_mu));
}

double RenormalizedPolynomial::c(int l) const { return std::exp(log_c_.at(l)); }
double RenormalizedPolynomial::mu(int l) const { return std::exp(log_mu_.at(l)); }
std::vector<double> RenormalizedPolynomial::coefficients() const { return exp_all(log_c_); }
std::vector<double> RenormalizedPolynomial::mu_values() const { return exp_all(log_mu_); }

MinkowskiPolynomial minkowski_polynomial(const FamilyInstance& body, const QuadratureConfig& cfg) {
  body.validate();
  const int n = body.n;
  std::vector<double> log_m(n + 1);
  if (body.kind == BodyKind::Ball) {
    const double log_kn = log_unit_ball_volume(n);
    const double log_rho = std::log(body.rho);
    for (int l = 0; l <= n; ++l) {
      log_m[l] = log_kn + specfun::log_binomial(n, l) + (n - l) * log_rho;
    }
  } else {
    const QuermassVector q = intrinsic_volumes(body, cfg);
    for (int l = 0; l <= n; ++l) log_m[l] = log_unit_ball_volume(l) + q.log_V(n - l);
  }
  return MinkowskiPolynomial(body, std::move(log_m));
}

RenormalizedPolynomial renormalize_log(const MinkowskiPolynomial& poly, double log_sigma,
                                       double log_vol) {
  if (!std::isfinite(log_sigma) || !std::isfinite(log_vol)) {
    throw DomainError("renormalize: volume and shape factor must be positive (solid body)");
  }
  const int n = poly.degree();
  if (n < 1) throw DomainError("renormalize: degree must be >= 1");
  std::vector<double> log_c(n + 1);
  for (int l = 0; l <= n; ++l) log_c[l] = poly.log_m(l) - log_vol - l * log_sigma;
  auto log_mu = log_mu_from_log_c(n, log_c);
  return RenormalizedPolynomial(poly.provenance(), std::move(log_c), std::move(log_mu));
}

RenormalizedPolynomial renormalize(const MinkowskiPolynomial& poly, double sigma, double vol) {
  if (!(vol > 0.0)) throw DomainError("renormalize: Vol_n(K) must be positive (solid body)");
  if (!(sigma > 0.0)) throw DomainError("renormalize: shape factor must be positive");
  return renormalize_log(poly, std::log(sigma), std::log(vol));
}

RenormalizedPolynomial renormalized(const FamilyInstance& body, const QuadratureConfig& cfg) {
  const MinkowskiPolynomial poly = minkowski_polynomial(body, cfg);
  return renormalize_log(poly, log_shape_factor(body), poly.log_m(0));
}

std::vector<double> log_mu_from_quermass(const QuermassVector& w) {
  const int n = w.n();
  std::vector<double> out(n + 1);
  const double log_w0 = w.log_W(0);
  const double log_w1 = n >= 1 ? w.log_W(1) : 0.0;
  for (int l = 0; l <= n; ++l) out[l] = (l - 1) * log_w0 + w.log_W(l) - l * log_w1;
  return out;
}

std::vector<double> mu_from_quermass(const QuermassVector& w) {
  return exp_all(log_mu_from_quermass(w));
}

std::vector<double> mu_from_quermass(const std::vector<double>& w) {
  if (w.size() < 2) throw DomainError("mu_from_quermass: need W_0 and W_1");
  std::vector<double> logs(w.size());
  for (std::size_t l = 0; l < w.size(); ++l) {
    if (!(w[l] > 0.0)) {
      throw DomainError("mu_from_quermass: W_" + std::to_string(l) + " is not positive");
    }
    logs[l] = std::log(w[l]);
  }
  const int n = static_cast<int>(w.size()) - 1;
  return mu_from_quermass(QuermassVector(n, std::vector<double>(w.size(), 0.0), logs));
}

RenormalizedPolynomial closed_form_renormalized(BodyKind kind, int n, const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("closed_form_renormalized: n must be >= 1");
  const double log_half_sqrt_pi = std::log(0.5 * std::sqrt(std::numbers::pi));
  const double log_n = std::log(static_cast<double>(n));
  const specfun::JensenTable jn(n);
  std::vector<double> log_c(n + 1);
  switch (kind) {
    case BodyKind::Ball:
      // (1 + τ/n)ⁿ
      for (int l = 0; l <= n; ++l) log_c[l] = jn.log_value(l) - log_factorial(l);
      break;
    case BodyKind::Cube:
      for (int l = 0; l <= n; ++l) {
        log_c[l] = jn.log_value(l) + l * log_half_sqrt_pi - log_gamma(0.5 * l + 1.0) -
                   log_factorial(l);
      }
      break;
    case BodyKind::CrossPolytope:
      log_c[0] = 0.0;
      for (int l = 1; l <= n; ++l) {
        const double log_i = std::log(i_cross(n, l, cfg).value);
        log_c[l] = l * log_half_sqrt_pi + 2.0 * jn.log_value(l) + 0.5 * log_n -
                   0.5 * std::log(n - l + 1.0) + std::numbers::ln2 + 0.5 * (l - 1) * log_n -
                   log_gamma(0.5 * l) + log_i - log_factorial(l);
      }
      break;
    case BodyKind::Simplex: {
      const specfun::JensenTable jn1(n + 1);
      const double log_n1 = std::log(n + 1.0);
      for (int l = 0; l <= n; ++l) {
        const double log_i = std::log(i_simplex(n, l, cfg).value);
        log_c[l] = 0.5 * l * std::log(std::numbers::pi) + log_i + 0.5 * std::log(n - l + 1.0) -
                   0.5 * log_n1 + 0.5 * l * (log_n1 - log_n) + jn1.log_value(l) +
                   jn.log_value(l) - log_gamma(0.5 * l + 1.0) - log_factorial(l);
      }
      break;
    }
  }
  auto log_mu = log_mu_from_log_c(n, log_c);
  return RenormalizedPolynomial(FamilyInstance{kind, n, 1.0}, std::move(log_c), std::move(log_mu));
}

std::vector<WideFloat> exact_renormalized_coefficients(BodyKind kind, int n) {
  if (n < 1) throw DomainError("exact_renormalized_coefficients: n must be >= 1");
  if (kind != BodyKind::Ball && kind != BodyKind::Cube) {
    throw DomainError("exact_renormalized_coefficients: only ball and cube have elementary "
                      "coefficients; got " + std::string(to_string(kind)));
  }
  const WideFloat sqrt_pi = sqrt(boost::math::constants::pi<WideFloat>());
  std::vector<WideFloat> c(n + 1);
  WideFloat jensen_over_factorial = 1;  // j_{n,l}/l! = C(n,l)/nˡ
  WideFloat gamma_even = 1;             // Γ(l/2 + 1) for even l
  WideFloat gamma_odd = sqrt_pi / 2;    // Γ(l/2 + 1) for odd l
  WideFloat power = 1;                  // (√π/2)ˡ
  for (int l = 0; l <= n; ++l) {
    if (l > 0) {
      jensen_over_factorial *= WideFloat(n - l + 1) / (WideFloat(n) * l);
      power *= sqrt_pi / 2;
      if (l % 2 == 0) {
        gamma_even *= WideFloat(l) / 2;
      } else if (l > 1) {
        gamma_odd *= WideFloat(l) / 2;
      }
    }
    if (kind == BodyKind::Ball) {
      c[l] = jensen_over_factorial;
    } else {
      c[l] = jensen_over_factorial * power / (l % 2 == 0 ? gamma_even : gamma_odd);
    }
  }
  return c;
}

std::complex<double> evaluate(const RenormalizedPolynomial& poly, std::complex<double> tau) {
  std::complex<double> acc = 0.0;
  for (int l = poly.degree(); l >= 0; --l) acc = acc * tau + poly.c(l);
  return acc;
}

Lemma1Report check_lemma1(const RenormalizedPolynomial& poly, double slack) {
  Lemma1Report report;
  const int n = poly.degree();
  const double log_upper = std::log1p(slack);
  const double log_lower = std::log1p(-slack);
  for (int l = 0; l <= n; ++l) {
    const double lm = poly.log_mu(l);
    if (!std::isfinite(lm)) {
      report.violations.push_back({Lemma1Violation::Kind::NonPositive, l, poly.mu(l)});
    } else if (lm > log_upper) {
      report.violations.push_back({Lemma1Violation::Kind::AboveOne, l, poly.mu(l)});
    }
  }
  for (int l = 1; l + 1 <= n; ++l) {
    const double lhs = 2.0 * poly.log_mu(l);
    const double rhs = poly.log_mu(l - 1) + poly.log_mu(l + 1) + log_lower;
    if (lhs < rhs) {
      report.violations.push_back(
          {Lemma1Violation::Kind::LogConcavity, l, std::exp(lhs - rhs + log_lower)});
    }
  }
  return report;
}

std::vector<int> coefficient_bound_violations(const RenormalizedPolynomial& poly, double slack) {
  std::vector<int> bad;
  for (int l = 0; l <= poly.degree(); ++l) {
    if (poly.log_c(l) + log_factorial(l) > std::log1p(slack)) bad.push_back(l);
  }
  return bad;
}

}  // namespace steiner
