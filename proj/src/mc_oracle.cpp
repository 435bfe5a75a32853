#include "steiner/mc_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "steiner/errors.hpp"
#include "steiner/polynomials.hpp"

namespace steiner {

void McConfig::validate() const {
  if (samples == 0) throw DomainError("McConfig: samples must be positive");
  if (chunk_size == 0) throw DomainError("McConfig: chunk_size must be positive");
}

std::vector<double> project_to_simplex(std::span<const double> v, double radius) {
  if (!(radius > 0.0)) throw DomainError("project_to_simplex: radius must be positive");
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - radius) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - theta, 0.0);
  return out;
}

std::vector<double> project_to_l1_ball(std::span<const double> v, double radius) {
  double norm1 = 0.0;
  for (double x : v) norm1 += std::abs(x);
  if (norm1 <= radius) return {v.begin(), v.end()};
  std::vector<double> magnitudes(v.size());
  std::transform(v.begin(), v.end(), magnitudes.begin(), [](double x) { return std::abs(x); });
  std::vector<double> out = project_to_simplex(magnitudes, radius);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::copysign(out[i], v[i]);
  return out;
}

namespace {

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Lifts hyperplane coordinates y to x = centroid + B·y ∈ ℝⁿ⁺¹ (Helmert basis, inlined).
void lift_simplex_point(std::span<const double> y, double rho, std::vector<double>& x) {
  const std::size_t n = y.size();
  x.assign(n + 1, rho / static_cast<double>(n + 1));
  // Column k (1-based) is (1,…,1,−k,0,…)/√(k(k+1)); accumulate suffix sums.
  double tail = 0.0;
  for (std::size_t k = n; k >= 1; --k) {
    const double w = y[k - 1] / std::sqrt(static_cast<double>(k) * (k + 1));
    x[k] += -static_cast<double>(k) * w + tail;
    tail += w;
  }
  x[0] += tail;
}

double body_distance(BodyKind kind, double rho, std::span<const double> p,
                     std::vector<double>& scratch) {
  switch (kind) {
    case BodyKind::Ball: {
      double s = 0.0;
      for (double x : p) s += x * x;
      return std::max(0.0, std::sqrt(s) - rho);
    }
    case BodyKind::Cube: {
      double s = 0.0;
      for (double x : p) {
        const double excess = std::max(0.0, std::abs(x) - rho);
        s += excess * excess;
      }
      return std::sqrt(s);
    }
    case BodyKind::CrossPolytope: {
      const auto proj = project_to_l1_ball(p, rho);
      return distance(p, proj);
    }
    case BodyKind::Simplex: {
      lift_simplex_point(p, rho, scratch);
      // The lift lies on Σx = ρ, so x ≥ 0 is exact membership; projecting an
      // interior point would leave a rounding-level distance that breaks t = 0.
      if (std::all_of(scratch.begin(), scratch.end(), [](double x) { return x >= 0.0; })) return 0.0;
      const auto proj = project_to_simplex(scratch, rho);
      return distance(scratch, proj);
    }
  }
  throw DomainError("unsupported kind");
}

}  // namespace

double distance_to_body(BodyKind kind, int n, double rho, std::span<const double> point) {
  if (n < 1 || point.size() != static_cast<std::size_t>(n)) {
    throw DomainError("distance_to_body: point dimension does not match n");
  }
  if (!(rho > 0.0)) throw DomainError("distance_to_body: rho must be positive");
  std::vector<double> scratch;
  return body_distance(kind, rho, point, scratch);
}

double sampling_half_width(const FamilyInstance& body, double t) {
  body.validate();
  if (body.kind == BodyKind::Simplex) {
    // Circumradius of the simplex with vertices ρ·e_i is ρ√(n/(n+1)).
    return body.rho * std::sqrt(body.n / (body.n + 1.0)) + t;
  }
  return body.rho + t;
}

McEstimate estimate_tube_volume(const FamilyInstance& body, double t, const McConfig& cfg) {
  body.validate();
  cfg.validate();
  if (!(t >= 0.0)) throw DomainError("estimate_tube_volume: t must be nonnegative");
  const int n = body.n;
  const double h = sampling_half_width(body, t);
  const std::uint64_t chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<std::uint64_t> hits(chunks, 0);

  auto run_chunk = [&](std::uint64_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> uniform(-h, h);
    const std::uint64_t begin = c * cfg.chunk_size;
    const std::uint64_t count = std::min(cfg.chunk_size, cfg.samples - begin);
    std::vector<double> point(n), scratch;
    std::uint64_t local = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      for (auto& x : point) x = uniform(rng);
      if (body_distance(body.kind, body.rho, point, scratch) <= t) ++local;
    }
    hits[c] = local;
  };

  unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::uint64_t total = 0;
  for (auto v : hits) total += v;
  McEstimate est;
  est.samples_used = cfg.samples;
  est.hits = total;
  est.box_volume = std::pow(2.0 * h, n);
  const double p = static_cast<double>(total) / static_cast<double>(cfg.samples);
  est.value = est.box_volume * p;
  est.std_error = est.box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.samples));
  est.ci95_low = est.value - 1.959963984540054 * est.std_error;
  est.ci95_high = est.value + 1.959963984540054 * est.std_error;
  return est;
}

bool ValidationTable::all_within_limit() const {
  return std::none_of(rows.begin(), rows.end(), [](const ValidationRow& r) { return r.flagged; });
}

ValidationTable validate_family(const FamilyInstance& body, const std::vector<double>& t_grid,
                                const McConfig& cfg, const QuadratureConfig& qcfg) {
  body.validate();
  if (body.n > kMaxValidationDim) {
    throw DomainError("Monte Carlo validation is limited to n <= " +
                      std::to_string(kMaxValidationDim));
  }
  for (double t : t_grid) {
    if (!(t >= 0.0)) throw DomainError("validate_family: t values must be nonnegative");
  }
  const MinkowskiPolynomial poly = minkowski_polynomial(body, qcfg);
  ValidationTable table{body, {}};
  for (double t : t_grid) {
    const McEstimate est = estimate_tube_volume(body, t, cfg);
    ValidationRow row;
    row.t = t;
    row.polynomial = poly(t);
    row.mc = est.value;
    row.std_error = est.std_error;
    const double diff = est.value - row.polynomial;
    if (est.std_error > 0.0) {
      row.z = diff / est.std_error;
    } else {
      row.z = diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
    }
    row.flagged = !(std::abs(row.z) <= kZScoreLimit);
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace steiner
