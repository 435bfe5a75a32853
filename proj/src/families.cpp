#include "steiner/families.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "steiner/errors.hpp"
#include "steiner/specfun.hpp"

namespace steiner {

namespace {

using specfun::log_binomial;
using specfun::log_factorial;
using specfun::log_unit_ball_volume;

const double kLog2 = std::numbers::ln2;

void check_face_index(BodyKind kind, int n, int l) {
  if (kind == BodyKind::Ball) {
    throw DomainError("balls have no faces; use the ball closed form");
  }
  if (n < 1) throw DomainError("dimension must be >= 1, got " + std::to_string(n));
  if (l < 0 || l > n) {
    throw DomainError("face dimension " + std::to_string(l) + " outside 0.." + std::to_string(n));
  }
}

std::uint64_t checked_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw DomainError("face count does not fit in 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t checked_shift(std::uint64_t value, int bits) {
  if (bits >= 64 || (value != 0 && value > (std::numeric_limits<std::uint64_t>::max() >> bits))) {
    throw DomainError("face count does not fit in 64 bits");
  }
  return value << bits;
}

}  // namespace

std::string_view to_string(BodyKind kind) {
  switch (kind) {
    case BodyKind::Ball: return "ball";
    case BodyKind::Cube: return "cube";
    case BodyKind::CrossPolytope: return "crosspolytope";
    case BodyKind::Simplex: return "simplex";
  }
  return "unknown";
}

BodyKind parse_body_kind(std::string_view name) {
  if (name == "ball") return BodyKind::Ball;
  if (name == "cube") return BodyKind::Cube;
  if (name == "crosspolytope" || name == "cross-polytope" || name == "cross") {
    return BodyKind::CrossPolytope;
  }
  if (name == "simplex") return BodyKind::Simplex;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

void FamilyInstance::validate() const {
  if (n < 1) throw DomainError("dimension must be >= 1, got " + std::to_string(n));
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("size parameter rho must be positive and finite");
  }
}

QuermassVector::QuermassVector(int n, std::vector<double> log_v, std::vector<double> log_w)
    : n_(n), log_v_(std::move(log_v)), log_w_(std::move(log_w)) {
  if (log_v_.size() != static_cast<std::size_t>(n + 1) ||
      log_w_.size() != static_cast<std::size_t>(n + 1)) {
    throw DomainError("QuermassVector: expected n+1 entries");
  }
}

double QuermassVector::V(int r) const { return std::exp(log_v_.at(r)); }
double QuermassVector::W(int l) const { return std::exp(log_w_.at(l)); }

std::uint64_t face_count(BodyKind kind, int n, int l) {
  check_face_index(kind, n, l);
  if (l == n) return 1;
  switch (kind) {
    case BodyKind::Cube: return checked_shift(checked_binomial(n, l), n - l);
    case BodyKind::CrossPolytope: return checked_shift(checked_binomial(n, l + 1), l + 1);
    case BodyKind::Simplex: return checked_binomial(n + 1, n - l);
    case BodyKind::Ball: break;
  }
  throw DomainError("unsupported kind");
}

double log_face_count(BodyKind kind, int n, int l) {
  check_face_index(kind, n, l);
  if (l == n) return 0.0;
  switch (kind) {
    case BodyKind::Cube: return (n - l) * kLog2 + log_binomial(n, l);
    case BodyKind::CrossPolytope: return (l + 1) * kLog2 + log_binomial(n, l + 1);
    case BodyKind::Simplex: return log_binomial(n + 1, n - l);
    case BodyKind::Ball: break;
  }
  throw DomainError("unsupported kind");
}

double log_face_volume(BodyKind kind, int n, int l, double rho) {
  check_face_index(kind, n, l);
  if (!(rho > 0.0)) throw DomainError("rho must be positive");
  const double log_rho = std::log(rho);
  switch (kind) {
    case BodyKind::Cube: return l * (kLog2 + log_rho);
    case BodyKind::CrossPolytope:
      // The whole body is not a simplex face: Vol_n(Cⁿ) = 2ⁿρⁿ/n!.
      if (l == n) return n * (kLog2 + log_rho) - log_factorial(n);
      return l * log_rho + 0.5 * std::log(l + 1.0) - log_factorial(l);
    case BodyKind::Simplex: return l * log_rho + 0.5 * std::log(l + 1.0) - log_factorial(l);
    case BodyKind::Ball: break;
  }
  throw DomainError("unsupported kind");
}

double face_volume(BodyKind kind, int n, int l, double rho) {
  return std::exp(log_face_volume(kind, n, l, rho));
}

double external_angle(BodyKind kind, int n, int l, const QuadratureConfig& cfg) {
  check_face_index(kind, n, l);
  if (l == n) return 1.0;
  switch (kind) {
    case BodyKind::Cube: return std::ldexp(1.0, -(n - l));
    case BodyKind::CrossPolytope: return gamma_cross(n, l, cfg).value;
    case BodyKind::Simplex: return gamma_simplex(n, l, cfg).value;
    case BodyKind::Ball: break;
  }
  throw DomainError("unsupported kind");
}

FaceData face_data(const FamilyInstance& body, int l, const QuadratureConfig& cfg) {
  body.validate();
  return {l, log_face_count(body.kind, body.n, l), face_volume(body.kind, body.n, l, body.rho),
          external_angle(body.kind, body.n, l, cfg)};
}

QuermassVector intrinsic_volumes(const FamilyInstance& body, const QuadratureConfig& cfg) {
  body.validate();
  const int n = body.n;
  const double log_rho = std::log(body.rho);
  std::vector<double> log_v(n + 1);
  if (body.kind == BodyKind::Ball) {
    // κ_n(ρ + t)ⁿ = Σ κ_l V_{n−l} tˡ.
    const double log_kn = log_unit_ball_volume(n);
    for (int r = 0; r <= n; ++r) {
      log_v[r] = log_kn + log_binomial(n, r) + r * log_rho - log_unit_ball_volume(n - r);
    }
  } else {
    for (int r = 0; r <= n; ++r) {
      double angle;
      try {
        angle = external_angle(body.kind, n, r, cfg);
      } catch (const QuadratureError& e) {
        throw QuadratureError(std::string(to_string(body.kind)) + " n=" + std::to_string(n) +
                              " l=" + std::to_string(r) + ": " + e.what());
      }
      log_v[r] = log_face_count(body.kind, n, r) + std::log(angle) +
                 log_face_volume(body.kind, n, r, body.rho);
    }
  }
  std::vector<double> log_w(n + 1);
  for (int l = 0; l <= n; ++l) {
    log_w[l] = log_unit_ball_volume(l) + log_v[n - l] - log_binomial(n, l);
  }
  return QuermassVector(n, std::move(log_v), std::move(log_w));
}

double log_shape_factor(const FamilyInstance& body) {
  body.validate();
  const double log_n = std::log(static_cast<double>(body.n));
  const double log_rho = std::log(body.rho);
  switch (body.kind) {
    case BodyKind::Ball:
    case BodyKind::Cube: return log_n - log_rho;
    case BodyKind::CrossPolytope: return 1.5 * log_n - log_rho;
    case BodyKind::Simplex: return 1.5 * log_n + 0.5 * std::log(body.n + 1.0) - log_rho;
  }
  throw DomainError("unsupported kind");
}

double shape_factor(const FamilyInstance& body) { return std::exp(log_shape_factor(body)); }

double log_volume(const FamilyInstance& body) {
  body.validate();
  const int n = body.n;
  const double log_rho = std::log(body.rho);
  switch (body.kind) {
    case BodyKind::Ball: return log_unit_ball_volume(n) + n * log_rho;
    case BodyKind::Cube: return n * (kLog2 + log_rho);
    case BodyKind::CrossPolytope: return n * (kLog2 + log_rho) - log_factorial(n);
    case BodyKind::Simplex: return 0.5 * std::log(n + 1.0) - log_factorial(n) + n * log_rho;
  }
  throw DomainError("unsupported kind");
}

std::vector<std::vector<double>> simplex_hyperplane_basis(int n) {
  if (n < 1) throw DomainError("simplex_hyperplane_basis: n must be >= 1");
  std::vector<std::vector<double>> basis(n, std::vector<double>(n + 1, 0.0));
  for (int k = 1; k <= n; ++k) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    auto& e = basis[k - 1];
    for (int i = 0; i < k; ++i) e[i] = norm;
    e[k] = -k * norm;
  }
  return basis;
}

}  // namespace steiner
