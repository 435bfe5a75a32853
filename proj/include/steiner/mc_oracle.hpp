#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "steiner/families.hpp"
#include "steiner/quadrature.hpp"

namespace steiner {

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  // Each chunk draws from its own generator keyed by (seed, chunk index), so
  // the estimate does not depend on how chunks are spread over threads.
  std::uint64_t chunk_size = 1 << 16;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;

  void validate() const;
};

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  std::uint64_t samples_used = 0;
  std::uint64_t hits = 0;
  double box_volume = 0.0;
};

// Euclidean projection onto {x ≥ 0, Σx = radius} (sort-and-threshold).
std::vector<double> project_to_simplex(std::span<const double> v, double radius);
// Euclidean projection onto the l1 ball of the given radius.
std::vector<double> project_to_l1_ball(std::span<const double> v, double radius);

// Distance from `point` to the body. For Simplex the point is given in the
// hyperplane coordinates y of x = centroid + B·y, with B from
// simplex_hyperplane_basis(n); for the other kinds it is a point of ℝⁿ.
double distance_to_body(BodyKind kind, int n, double rho, std::span<const double> point);

// Half-width of the sampling box (centred at the origin, or at the centroid in
// hyperplane coordinates for the simplex) that contains K + tBⁿ.
double sampling_half_width(const FamilyInstance& body, double t);

// Hit-or-miss estimate of Vol_n(K + tBⁿ).
McEstimate estimate_tube_volume(const FamilyInstance& body, double t, const McConfig& cfg = {});

struct ValidationRow {
  double t = 0.0;
  double polynomial = 0.0;
  double mc = 0.0;
  double std_error = 0.0;
  double z = 0.0;
  bool flagged = false;
};

struct ValidationTable {
  FamilyInstance body;
  std::vector<ValidationRow> rows;
  bool all_within_limit() const;
};

inline constexpr int kMaxValidationDim = 6;
inline constexpr double kZScoreLimit = 4.0;

// Compares M_K(t) from minkowski_polynomial with the Monte Carlo estimate at each t;
// rows with |z| > 4 are flagged. Requires n <= 6 and t >= 0.
ValidationTable validate_family(const FamilyInstance& body, const std::vector<double>& t_grid,
                                const McConfig& cfg = {}, const QuadratureConfig& qcfg = {});

}  // namespace steiner
