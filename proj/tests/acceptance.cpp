// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: steiner_acceptance [zero-report-path]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "steiner/errors.hpp"
#include "steiner/families.hpp"
#include "steiner/limits.hpp"
#include "steiner/mc_oracle.hpp"
#include "steiner/polynomials.hpp"
#include "steiner/quadrature.hpp"
#include "steiner/zeros.hpp"

using namespace steiner;

namespace {

using Clock = std::chrono::steady_clock;

constexpr BodyKind kAll[] = {BodyKind::Ball, BodyKind::Cube, BodyKind::CrossPolytope,
                             BodyKind::Simplex};

int max_dim(BodyKind k) {
  return (k == BodyKind::Ball || k == BodyKind::Cube) ? 100 : 60;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

// Runs a criterion, turning any library exception into a FAIL line.
void run(int id, const std::string& name, const std::function<Outcome()>& body) {
  try {
    report(id, name, body());
  } catch (const std::exception& e) {
    report(id, name, {false, std::string("exception: ") + e.what()});
  }
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct PolyCache {
  std::map<std::pair<BodyKind, int>, RenormalizedPolynomial> polys;
  double build_seconds = 0.0;
};

PolyCache build_all() {
  PolyCache cache;
  const auto start = Clock::now();
  for (BodyKind k : kAll) {
    for (int n = 1; n <= max_dim(k); ++n) cache.polys.emplace(std::pair{k, n}, renormalized({k, n, 1.0}));
  }
  cache.build_seconds = seconds_since(start);
  return cache;
}

Outcome normalization(const PolyCache& cache) {
  double worst = 0.0;
  for (const auto& [key, p] : cache.polys) {
    worst = std::max({worst, std::abs(p.mu(0) - 1.0), std::abs(p.mu(1) - 1.0)});
  }
  Outcome o;
  o.pass = worst <= 1e-10 && cache.build_seconds < 120.0;
  o.detail = fmt("max |mu_0,1 - 1| = %.3e", worst) + fmt(", %.1f s", cache.build_seconds);
  return o;
}

Outcome mu_bounds(const PolyCache& cache) {
  const auto start = Clock::now();
  int bad = 0;
  double min_mu = INFINITY, max_mu = 0.0;
  for (const auto& [key, p] : cache.polys) {
    if (!check_lemma1(p, 1e-9).ok()) ++bad;
    for (int l = 0; l <= p.degree(); ++l) {
      min_mu = std::min(min_mu, p.mu(l));
      max_mu = std::max(max_mu, p.mu(l));
    }
  }
  const double secs = cache.build_seconds + seconds_since(start);
  Outcome o;
  // Log-concavity carries the 1e-9 slack; mu <= 1 only a rounding-level one.
  o.pass = bad == 0 && min_mu > 0.0 && max_mu <= 1.0 + 1e-12 && secs < 120.0;
  o.detail = std::to_string(bad) + " violating polynomials" + fmt(", mu in [%.3e, ", min_mu) +
             fmt("%.15g]", max_mu) + fmt(", %.1f s", secs);
  return o;
}

Outcome exponential_bound(const PolyCache& cache) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> radius(0.0, 5.0), angle(0.0, 2 * std::numbers::pi);
  int coeff_bad = 0, value_bad = 0;
  double worst_ratio = 0.0;
  for (const auto& [key, p] : cache.polys) {
    // 1/l! is met up to the last-bit rounding of c_l itself.
    if (!coefficient_bound_violations(p, 1e-12).empty()) ++coeff_bad;
    for (int i = 0; i < 100; ++i) {
      const auto tau = std::polar(radius(rng), angle(rng));
      const double ratio = std::abs(evaluate(p, tau)) / std::exp(std::abs(tau));
      worst_ratio = std::max(worst_ratio, ratio);
      if (ratio > 1.0 + 1e-10) ++value_bad;
    }
  }
  Outcome o;
  o.pass = coeff_bad == 0 && value_bad == 0;
  o.detail = std::to_string(coeff_bad) + " coefficient violations, " + std::to_string(value_bad) +
             " value violations" + fmt(", max |M(tau)|/e^|tau| = %.6f", worst_ratio);
  return o;
}

Outcome closed_forms() {
  double worst = 0.0;
  for (BodyKind k : kAll) {
    for (int n = 1; n <= 60; ++n) {
      const auto a = renormalized({k, n, 1.0});
      const auto b = closed_form_renormalized(k, n);
      for (int l = 0; l <= n; ++l) {
        worst = std::max(worst, std::abs(a.c(l) - b.c(l)) / std::abs(b.c(l)));
      }
    }
  }
  return {worst <= 1e-9, fmt("max relative difference %.3e", worst)};
}

Outcome exact_angles() {
  double worst = 0.0;
  auto track = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };
  for (int n = 1; n <= 60; ++n) {
    track(external_angle(BodyKind::Simplex, n, 0), 1.0 / (n + 1));
    track(external_angle(BodyKind::Simplex, n, n - 1), 0.5);
    track(external_angle(BodyKind::Simplex, n, n), 1.0);
    track(i_simplex(n, 0).value, 1.0);
    track(i_simplex(n, 1).value, 0.5);
    track(i_simplex(n, n).value, 1.0 / (n + 1));
    for (int l = 0; l <= n; ++l) track(external_angle(BodyKind::Cube, n, l), std::ldexp(1.0, -(n - l)));
  }
  return {worst <= 1e-9, fmt("max abs error %.3e", worst)};
}

Outcome limit_convergence() {
  Outcome o;
  std::ostringstream detail;
  for (BodyKind k : kAll) {
    const auto p = convergence_profile(k, {8, 16, 32, 64, 128}, 1.0);
    for (std::size_t i = 1; i < p.distances.size(); ++i) {
      if (!(p.distances[i] < p.distances[i - 1])) {
        o.pass = false;
        detail << to_string(k) << " profile not decreasing at n=" << p.dims[i] << "; ";
      }
    }
  }
  const double d1000 = convergence_profile(BodyKind::Ball, {1000}, 1.0).distances[0];
  if (!(d1000 <= 0.002)) o.pass = false;
  detail << fmt("ball d_1000 = %.5f", d1000);

  // Shrink factor per l; l = 0, 1 are exact identities on both sides (difference 0),
  // which count as converged when both ends stay at rounding level.
  double worst_shrink = INFINITY;
  for (BodyKind k : kAll) {
    const int hi = (k == BodyKind::Ball || k == BodyKind::Cube) ? 1000 : 160;
    const auto f = limit_for(k);
    const auto a = renormalized({k, 10, 1.0});
    const auto b = renormalized({k, hi, 1.0});
    for (int l = 0; l <= 5; ++l) {
      const double d_lo = std::abs(a.c(l) - limit_coefficient(f, l));
      const double d_hi = std::abs(b.c(l) - limit_coefficient(f, l));
      if (d_lo <= 1e-12 && d_hi <= 1e-12) continue;
      const double shrink = d_lo / d_hi;
      worst_shrink = std::min(worst_shrink, shrink);
      if (!(shrink >= 3.0)) {
        o.pass = false;
        detail << "; " << to_string(k) << " l=" << l << fmt(" shrink %.2f", shrink);
      }
    }
  }
  detail << fmt(", min coefficient shrink %.1fx", worst_shrink);
  o.detail = detail.str();
  return o;
}

Outcome monte_carlo() {
  const auto start = Clock::now();
  McConfig cfg;
  cfg.samples = 1'000'000;
  cfg.seed = 42;
  int agree = 0, cells = 0;
  double cube_poly = 0.0, cube_mc = 0.0, cube_se = 0.0;
  for (BodyKind k : kAll) {
    for (int n : {2, 3}) {
      const auto table = validate_family({k, n, 1.0}, {0.25, 1.0}, cfg);
      for (const auto& row : table.rows) {
        ++cells;
        if (!row.flagged) ++agree;
        if (k == BodyKind::Cube && n == 2 && row.t == 1.0) {
          cube_poly = row.polynomial;
          cube_mc = row.mc;
          cube_se = row.std_error;
        }
      }
    }
  }
  const double secs = seconds_since(start);
  const double exact = 4 + 8 + std::numbers::pi;  // area + perimeter·t + πt²
  const bool cube_ok = std::abs(cube_poly - exact) <= 1e-9 * exact &&
                       std::abs(cube_mc - exact) <= kZScoreLimit * cube_se;
  Outcome o;
  o.pass = cells == 16 && agree >= 15 && cube_ok && secs < 60.0;
  o.detail = std::to_string(agree) + "/" + std::to_string(cells) + " cells within 4 sigma" +
             fmt(", cube n=2 t=1: poly %.6f", cube_poly) + fmt(" mc %.4f", cube_mc) +
             fmt(" +- %.4f", cube_se) + fmt(", %.1f s", secs);
  return o;
}

bool certified(const RootSet& rs, const RootConfig& cfg) {
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (!(rs.relative_residual(i) <= cfg.residual_tol)) return false;
    if (!(rs.certificate_residuals[i] <= 10 * rs.residuals[i])) return false;
  }
  return true;
}

Outcome zero_experiments(const std::string& archive_path) {
  Outcome o;
  std::ostringstream detail;
  const RootConfig cfg;

  double worst_ball = 0.0;
  for (int n = 1; n <= 100; ++n) {
    const auto rs = find_roots(renormalized({BodyKind::Ball, n, 1.0}), cfg);
    for (auto z : rs.roots) worst_ball = std::max(worst_ball, std::abs(z + double(n)) / n);
  }
  if (!(worst_ball <= 1e-6)) o.pass = false;
  detail << fmt("ball max |z+n|/n = %.2e", worst_ball);

  int cube_bad = 0;
  double cube_max_imag = 0.0;
  for (int n = 1; n <= 50; ++n) {
    const auto rs = find_roots(exact_renormalized_coefficients(BodyKind::Cube, n), cfg);
    const auto rep = classify_zeros(rs);
    cube_max_imag = std::max(cube_max_imag, rep.max_abs_imag_among_roots);
    if (!rep.all_negative_real || !certified(rs, cfg)) {
      ++cube_bad;
      detail << "; cube n=" << n << " not certified negative real";
    }
  }
  if (cube_bad) o.pass = false;
  detail << "; cube n<=50 negative real and certified: " << (cube_bad ? "no" : "yes")
         << fmt(" (max |imag| %.1e)", cube_max_imag);

  std::ofstream out(archive_path, std::ios::binary);
  out << "family,n,max_real_part,max_abs_imag,all_negative_real,all_left_half_plane,"
         "resolved_nonreal,precision_used\n";
  int generated = 0;
  double worst_real = -INFINITY;
  int first_nonreal[2] = {0, 0};
  for (int idx = 0; idx < 2; ++idx) {
    const BodyKind k = idx == 0 ? BodyKind::CrossPolytope : BodyKind::Simplex;
    for (int n = 1; n <= 50; ++n) {
      const auto rs = find_roots(renormalized({k, n, 1.0}), cfg);
      const auto rep = classify_zeros(rs);
      worst_real = std::max(worst_real, rep.max_real_part);
      if (rep.resolved_nonreal > 0 && first_nonreal[idx] == 0) first_nonreal[idx] = n;
      char line[256];
      std::snprintf(line, sizeof line, "%s,%d,%.17g,%.17g,%d,%d,%d,%s\n",
                    std::string(to_string(k)).c_str(), n, rep.max_real_part,
                    rep.max_abs_imag_among_roots, rep.all_negative_real ? 1 : 0,
                    rep.all_left_half_plane ? 1 : 0, rep.resolved_nonreal, rs.precision_used.c_str());
      out << line;
      ++generated;
    }
  }
  out.close();
  if (!out || generated != 100) o.pass = false;
  detail << "; " << generated << " cross-polytope/simplex reports archived to " << archive_path
         << fmt(" (max real part %.4f", worst_real) << ", first resolved non-real at n="
         << first_nonreal[0] << " / n=" << first_nonreal[1] << ")";
  o.detail = detail.str();
  return o;
}

Outcome scale_invariance() {
  double worst = 0.0;
  for (BodyKind k : kAll) {
    for (int n = 1; n <= 30; ++n) {
      const auto a = renormalized({k, n, 1.0});
      const auto b = renormalized({k, n, 3.7});
      for (int l = 0; l <= n; ++l) worst = std::max(worst, std::abs(a.c(l) - b.c(l)) / a.c(l));
    }
  }
  return {worst <= 1e-12, fmt("max relative change %.3e", worst)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string archive = argc > 1 ? argv[1] : "zero_reports.csv";
  PolyCache cache;
  try {
    cache = build_all();
  } catch (const std::exception& e) {
    std::printf("FAIL building polynomials: %s\n", e.what());
    return 1;
  }
  run(1, "normalization mu_0 = mu_1 = 1", [&] { return normalization(cache); });
  run(2, "mu bounds and log-concavity", [&] { return mu_bounds(cache); });
  run(3, "coefficient and exponential bounds", [&] { return exponential_bound(cache); });
  run(4, "pipeline matches closed forms", closed_forms);
  run(5, "exact angle values", exact_angles);
  run(6, "convergence to the limit functions", limit_convergence);
  run(7, "Monte Carlo validation", monte_carlo);
  run(8, "zero experiments", [&] { return zero_experiments(archive); });
  run(9, "scale invariance", scale_invariance);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
