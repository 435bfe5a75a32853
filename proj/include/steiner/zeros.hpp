#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "steiner/polynomials.hpp"

namespace steiner {

struct RootConfig {
  // Accept a root when |p(z)| ≤ residual_tol·Σ|c_l||z|ˡ (relative backward error).
  double residual_tol = 1e-11;
  // Relative uncertainty of double-precision input coefficients. Approximations
  // whose inclusion discs overlap at this level form a candidate cluster; it is
  // replaced by a refined common centre when that centre passes a backward-error
  // test for a root of the cluster's multiplicity.
  double coefficient_rel_error = 1e-13;
  // Same for WideFloat input coefficients.
  double wide_coefficient_rel_error = 1e-45;
  int max_iterations = 2000;
  // Highest degree solved in plain double before switching to double-double.
  // The ladder never starts below the precision of the input coefficients.
  int double_max_degree = 30;
  bool collapse_clusters = true;
};

struct RootSet {
  // Zeros in τ, listed with multiplicity (length = degree).
  std::vector<std::complex<double>> roots;
  // |p(root)| as computed, floored by the rounding-error bound of the evaluation.
  std::vector<double> residuals;
  // |p(root)| re-evaluated at roughly twice the working precision.
  std::vector<double> certificate_residuals;
  // Σ|c_l||root|ˡ, the scale the residual is measured against.
  std::vector<double> scales;
  // Radius of a disc around each root guaranteed to contain a zero of the
  // given coefficients.
  std::vector<double> error_bounds;
  // Same radius with the coefficient uncertainty of the input added: how far
  // the root may move when the coefficients vary within their stated accuracy
  // (first-order estimate, not a guarantee).
  std::vector<double> data_error_bounds;
  // Size of the cluster each root belongs to (1 for an isolated root).
  std::vector<int> multiplicities;
  std::string precision_used;

  double relative_residual(std::size_t i) const { return residuals.at(i) / scales.at(i); }
};

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, RootSet best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const RootSet& best_iterate() const { return best_; }

 private:
  RootSet best_;
};

// Aberth–Ehrlich simultaneous iteration on the scaled variable τ = s·u, with
// Newton-polygon starting circles and a double → double-double → WideFloat
// precision ladder. A rung is accepted when every relative residual is within
// residual_tol and its re-evaluation at the next precision is at most 10× the
// reported value. Throws DomainError for degree 0, RootFindingError on failure.
RootSet find_roots(const RenormalizedPolynomial& poly, const RootConfig& cfg = {});

// Same for arbitrary real coefficients c_0..c_n with c_0 ≠ 0 and c_n ≠ 0.
RootSet find_roots(const std::vector<double>& coefficients, const RootConfig& cfg = {});

// Coefficients given to WideFloat precision (see exact_renormalized_coefficients).
RootSet find_roots(const std::vector<WideFloat>& coefficients, const RootConfig& cfg = {});

// |p(z)| / Σ|c_l||z|ˡ evaluated in double-double arithmetic.
double relative_residual_dd(const std::vector<double>& coefficients, std::complex<double> z);
double relative_residual_dd(const RenormalizedPolynomial& poly, std::complex<double> z);
// Same in CertFloat arithmetic for WideFloat coefficients.
double relative_residual_wide(const std::vector<WideFloat>& coefficients, std::complex<double> z);

struct ZeroLocationReport {
  bool all_negative_real = false;
  bool all_left_half_plane = false;
  double max_real_part = 0.0;
  double max_abs_imag_among_roots = 0.0;
  int clusters = 0;
  // Non-real roots whose imaginary part exceeds their data_error_bound, i.e.
  // roots that stay off the real axis under any admissible coefficient error.
  int resolved_nonreal = 0;
};

// A root counts as real when |Im z| ≤ imag_tol·(1 + |z|).
ZeroLocationReport classify_zeros(const RootSet& roots, double imag_tol = 1e-8);

}  // namespace steiner
