#pragma once

#include <complex>
#include <vector>

#include "steiner/families.hpp"
#include "steiner/precision.hpp"
#include "steiner/quadrature.hpp"

namespace steiner {

// M_K(t) = Σ m_l tˡ = Vol_n(K + tBⁿ). Coefficients are positive and stored as
// natural logs; m_l has units length^{n−l}.
class MinkowskiPolynomial {
 public:
  MinkowskiPolynomial(FamilyInstance provenance, std::vector<double> log_m);

  int degree() const { return static_cast<int>(log_m_.size()) - 1; }
  const FamilyInstance& provenance() const { return provenance_; }
  double m(int l) const;
  double log_m(int l) const { return log_m_.at(l); }
  const std::vector<double>& log_coefficients() const { return log_m_; }
  std::vector<double> coefficients() const;

  // M_K(t) for real t >= 0, summed in scaled form so large n does not overflow
  // before the result does.
  double operator()(double t) const;

 private:
  FamilyInstance provenance_;
  std::vector<double> log_m_;
};

// 𝓜_K(τ) = M_K(τ/σ_K)/Vol_n(K) = Σ c_l τˡ with c_l = j_{n,l} μ_l / l!.
// Coefficients and μ are stored as logs; c_l underflows harmlessly when
// materialized for large l.
class RenormalizedPolynomial {
 public:
  RenormalizedPolynomial(FamilyInstance provenance, std::vector<double> log_c,
                         std::vector<double> log_mu);

  // Builds c_l = j_{n,l} μ_l / l! from a μ sequence of length n+1. Values must be positive.
  static RenormalizedPolynomial from_mu(FamilyInstance provenance, const std::vector<double>& mu);

  int degree() const { return static_cast<int>(log_c_.size()) - 1; }
  const FamilyInstance& provenance() const { return provenance_; }
  double c(int l) const;
  double mu(int l) const;
  double log_c(int l) const { return log_c_.at(l); }
  double log_mu(int l) const { return log_mu_.at(l); }
  const std::vector<double>& log_coefficients() const { return log_c_; }
  const std::vector<double>& log_mu() const { return log_mu_; }
  std::vector<double> coefficients() const;
  std::vector<double> mu_values() const;

 private:
  FamilyInstance provenance_;
  std::vector<double> log_c_;
  std::vector<double> log_mu_;
};

MinkowskiPolynomial minkowski_polynomial(const FamilyInstance& body,
                                         const QuadratureConfig& cfg = {});

// c_l = m_l/(vol·σˡ), μ_l = c_l·l!/j_{n,l}. Throws DomainError for a non-solid
// body (vol <= 0) or sigma <= 0.
RenormalizedPolynomial renormalize(const MinkowskiPolynomial& poly, double sigma, double vol);
// Same, with ln σ and ln vol so that volumes outside double range are usable.
RenormalizedPolynomial renormalize_log(const MinkowskiPolynomial& poly, double log_sigma,
                                       double log_vol);

// Full pipeline: minkowski_polynomial, then renormalize with the closed-form
// shape factor and vol = m_0.
RenormalizedPolynomial renormalized(const FamilyInstance& body, const QuadratureConfig& cfg = {});

// μ_l = W_0^{l−1} W_l / W_1^l.
std::vector<double> mu_from_quermass(const QuermassVector& w);
std::vector<double> log_mu_from_quermass(const QuermassVector& w);
// Same from plain (materialized) values; throws DomainError on a non-positive entry.
std::vector<double> mu_from_quermass(const std::vector<double>& w);

// 𝓜 built directly from the per-family displayed closed forms in terms of
// j_{n,l} and I_{n,l}; shares no code path with face data or shape factors.
RenormalizedPolynomial closed_form_renormalized(BodyKind kind, int n,
                                                const QuadratureConfig& cfg = {});

// Coefficients c_0..c_n of 𝓜 carried to WideFloat precision for the two
// families whose coefficients are elementary: (1 + τ/n)ⁿ for the ball and
// j_{n,l}(√π/2)ˡ/(Γ(l/2 + 1)·l!) for the cube. Throws DomainError for the
// quadrature-based families and for n < 1.
std::vector<WideFloat> exact_renormalized_coefficients(BodyKind kind, int n);

std::complex<double> evaluate(const RenormalizedPolynomial& poly, std::complex<double> tau);

struct Lemma1Violation {
  enum class Kind { NonPositive, AboveOne, LogConcavity };
  Kind kind;
  int index;
  double value;
};

struct Lemma1Report {
  std::vector<Lemma1Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks 0 < μ_l ≤ 1 + slack and μ_l² ≥ μ_{l−1}μ_{l+1}(1 − slack).
Lemma1Report check_lemma1(const RenormalizedPolynomial& poly, double slack = 1e-9);

// Indices with c_l > (1 + slack)/l!; empty when the exp(|τ|) bound is implied.
std::vector<int> coefficient_bound_violations(const RenormalizedPolynomial& poly,
                                              double slack = 1e-12);

}  // namespace steiner
