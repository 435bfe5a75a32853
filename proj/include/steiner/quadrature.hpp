#pragma once

#include <functional>

namespace steiner {

struct QuadratureConfig {
  // Target absolute error of each returned value.
  double abs_tol = 1e-12;
  // Relative target; keeps tiny integrals (high powers of erf) accurate.
  double rel_tol = 1e-13;
  int max_subdivisions = 400;
  // The integration window ends where the integrand has dropped by
  // exp(-truncation_radius^2) from its peak. For an un-shifted Gaussian
  // this is exactly the interval [-X, X].
  double truncation_radius = 10.0;

  // Throws DomainError unless abs_tol > 0, rel_tol >= 0, truncation_radius >= 6.
  void validate() const;
};

struct IntegralValue {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Adaptive 21-point Gauss–Kronrod on [a, b] (QUADPACK QAG scheme).
// Throws QuadratureError if the tolerance is not met within max_subdivisions.
IntegralValue integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                 double abs_tol, double rel_tol, int max_subdivisions);

// ∫ exp(log_f(x)) dx over (lower, ∞) for a concave log_f, where lower may be
// -infinity. The integrand is rescaled by its peak so tiny integrals keep
// full relative accuracy.
IntegralValue integrate_log_concave(const std::function<double(double)>& log_f, double lower,
                                    const QuadratureConfig& cfg);

// External angle γ_l(Cⁿ) of the cross-polytope at an l-face, 0 ≤ l ≤ n−1:
// (1/√π)∫₀^∞ e^{−x²} erf(x/√(l+1))^{n−l−1} dx.
IntegralValue gamma_cross(int n, int l, const QuadratureConfig& cfg = {});

// External angle γ_l(Sⁿ) of the regular simplex at an l-face, 0 ≤ l ≤ n:
// (1/√π)∫ e^{−x²} ((1 + erf(x/√(l+1)))/2)^{n−l} dx.
IntegralValue gamma_simplex(int n, int l, const QuadratureConfig& cfg = {});

// I_{n,l} for the cross-polytope, 1 ≤ l ≤ n:
// (2/√π)∫₀^∞ e^{−x²} erf(x/√(n−l+1))^{l−1} dx.
IntegralValue i_cross(int n, int l, const QuadratureConfig& cfg = {});

// I_{n,l} for the simplex, 0 ≤ l ≤ n:
// (1/√π)∫ e^{−x²} ((1 + erf(x/√(n−l+1)))/2)^l dx.
IntegralValue i_simplex(int n, int l, const QuadratureConfig& cfg = {});

// Leading large-n term (1/2)(2/√π)^l n^{−(l−1)/2} Γ(l/2) of i_cross.
double i_cross_asymptotic(int n, int l);

// Large-n limit 2^{−l} of i_simplex.
double i_simplex_asymptotic(int l);

// Number of distinct integrals evaluated so far (the rest were cache hits).
long quadrature_cache_misses();

}  // namespace steiner
