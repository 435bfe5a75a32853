#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "steiner/quadrature.hpp"

namespace steiner {

enum class BodyKind { Ball, Cube, CrossPolytope, Simplex };

std::string_view to_string(BodyKind kind);
// Accepts "ball", "cube", "crosspolytope" (also "cross", "cross-polytope"), "simplex".
BodyKind parse_body_kind(std::string_view name);

// One member of the four families: the radius-ρ ball, the cube [−ρ, ρ]ⁿ, the
// l1-ball Σ|ξ| ≤ ρ, and the regular simplex {ξ ≥ 0, Σξ = ρ} ⊂ ℝⁿ⁺¹ viewed
// inside its n-dimensional hyperplane.
struct FamilyInstance {
  BodyKind kind = BodyKind::Ball;
  int n = 1;
  double rho = 1.0;

  // Throws DomainError unless n >= 1 and rho > 0.
  void validate() const;
};

struct FaceData {
  int l = 0;
  double log_nu = 0.0;
  double v = 0.0;
  double gamma = 0.0;
};

// Intrinsic volumes V_0..V_n and quermassintegrals W_0..W_n, held as natural
// logs (all entries of a solid body are positive) and materialized on demand.
// m_l = binomial(n,l)·W_l = κ_l·V_{n−l}.
class QuermassVector {
 public:
  QuermassVector(int n, std::vector<double> log_v, std::vector<double> log_w);

  int n() const { return n_; }
  double V(int r) const;
  double W(int l) const;
  double log_V(int r) const { return log_v_.at(r); }
  double log_W(int l) const { return log_w_.at(l); }
  const std::vector<double>& log_V() const { return log_v_; }
  const std::vector<double>& log_W() const { return log_w_; }

 private:
  int n_;
  std::vector<double> log_v_;
  std::vector<double> log_w_;
};

// Number ν_l of l-faces. l = n is the body itself (count 1). Balls have no
// faces and throw DomainError; so does a count that does not fit in 64 bits.
std::uint64_t face_count(BodyKind kind, int n, int l);
double log_face_count(BodyKind kind, int n, int l);

// l-volume v_l of each l-face.
double face_volume(BodyKind kind, int n, int l, double rho);
double log_face_volume(BodyKind kind, int n, int l, double rho);

// Normalized external angle γ_l at an l-face (exact for cubes, quadrature otherwise).
double external_angle(BodyKind kind, int n, int l, const QuadratureConfig& cfg = {});

FaceData face_data(const FamilyInstance& body, int l, const QuadratureConfig& cfg = {});

QuermassVector intrinsic_volumes(const FamilyInstance& body, const QuadratureConfig& cfg = {});

// Surface-to-volume ratio σ_K from the closed forms (units 1/length).
double shape_factor(const FamilyInstance& body);
double log_shape_factor(const FamilyInstance& body);

// Closed-form Vol_n(K).
double log_volume(const FamilyInstance& body);

// Orthonormal basis of {Σξ = 0} ⊂ ℝⁿ⁺¹, as n column vectors of length n+1
// (Helmert construction). Maps hyperplane coordinates of Sⁿ to ℝⁿ⁺¹.
std::vector<std::vector<double>> simplex_hyperplane_basis(int n);

}  // namespace steiner
