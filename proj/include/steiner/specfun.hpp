#pragma once

#include <vector>

namespace steiner::specfun {

// ln Γ(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

// Error function (2/√π)∫₀ˣ e^{−y²} dy.
double erf(double x);

// erfc(x) = 1 − erf(x), accurate in relative terms for large positive x.
double erfc(double x);

// ln Φ(x) where Φ(x) = (1 + erf(x))/2 = erfc(−x)/2. Finite down to x ≈ −26.
double log_half_erfc_neg(double x);

// κ_l, the volume of the unit ball in ℝˡ, and its logarithm.
double unit_ball_volume(int l);
double log_unit_ball_volume(int l);

double log_factorial(int n);
double log_binomial(int n, int k);

// Table of j_{n,l} = ∏_{0≤r<l}(1 − r/n) for l = 0..n.
class JensenTable {
 public:
  explicit JensenTable(int n);

  int n() const { return n_; }
  // j_{n,l}; zero beyond the degree.
  double operator()(int l) const;
  // ln j_{n,l}; −∞ beyond the degree.
  double log_value(int l) const;
  const std::vector<double>& values() const { return values_; }

 private:
  int n_;
  std::vector<double> values_;
  std::vector<double> logs_;
};

JensenTable jensen_multipliers(int n);

// ln j_{n,l} without materializing the table.
double log_jensen(int n, int l);

}  // namespace steiner::specfun
