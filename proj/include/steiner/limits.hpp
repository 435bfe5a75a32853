#pragma once

#include <complex>
#include <vector>

#include "steiner/families.hpp"
#include "steiner/polynomials.hpp"

namespace steiner {

// The two limiting entire functions of the four families:
// E1(τ) = exp(τ) and E2(τ) = Σ (√π/2)ˡ τˡ / (Γ(l/2 + 1)·l!).
enum class LimitFunction { E1, E2 };

LimitFunction limit_for(BodyKind kind);

// Taylor coefficient of τˡ.
double limit_coefficient(LimitFunction f, int l);

// E2 is summed until the tail majorant Σ_{l>L} |τ|ˡ/l! drops below tol.
std::complex<double> eval_limit(LimitFunction f, std::complex<double> tau, double tol = 1e-15);

struct ConvergenceProfile {
  BodyKind kind = BodyKind::Ball;
  double radius = 1.0;
  int samples = 256;
  std::vector<int> dims;
  // distances[i] = max over the sampled circle |τ| = radius of |𝓜_{Kⁿ}(τ) − limit(τ)|.
  std::vector<double> distances;
};

// Max of |poly(τ) − f(τ)| over `samples` equally spaced points on |τ| = radius.
double sup_distance(const RenormalizedPolynomial& poly, LimitFunction f, double radius,
                    int samples);

// dims must be strictly increasing, radius >= 0, samples >= 64.
ConvergenceProfile convergence_profile(BodyKind kind, const std::vector<int>& dims, double radius,
                                       int samples = 256, const QuadratureConfig& cfg = {});

}  // namespace steiner
