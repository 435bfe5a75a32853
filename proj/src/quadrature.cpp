#include "steiner/quadrature.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "steiner/errors.hpp"
#include "steiner/specfun.hpp"

namespace steiner {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gauss (10-point) / Kronrod (21-point) abscissae and weights, from QUADPACK dqk21.
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

struct Segment {
  double a, b, result, error;
};

Segment kronrod21(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double res_g = 0.0;
  double res_k = kKronrodWeights[10] * fc;
  double res_abs = std::abs(res_k);
  std::array<double, 10> fv1{}, fv2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    res_k += kKronrodWeights[j] * (f1 + f2);
    res_abs += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) res_g += kGaussWeights[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * res_k;
  double res_asc = kKronrodWeights[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    res_asc += kKronrodWeights[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }
  const double scale = std::abs(half);
  res_asc *= scale;
  res_abs *= scale;
  double err = std::abs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * res_abs, err);
  }
  return {a, b, res_k * half, err};
}

double safe(double v) { return std::isnan(v) ? -kInf : v; }

// Maximizer of a concave function on (lower, ∞).
double locate_peak(const std::function<double(double)>& g, double lower) {
  double x = std::isfinite(lower) ? lower + 1.0 : 0.0;
  double gx = safe(g(x));
  double step = 1.0;
  double left = std::isfinite(lower) ? lower : -kInf;
  double right = kInf;
  // Walk uphill with doubling steps until bracketed.
  const double probe = safe(g(x + 1e-3));
  const int dir = (probe > gx || gx == -kInf) ? +1 : -1;
  for (int it = 0; it < 200; ++it) {
    double next = x + dir * step;
    if (dir < 0 && next <= left) {
      // Peak lies between the lower end and x.
      right = x + step;
      break;
    }
    const double gn = safe(g(next));
    if (gn < gx) {
      if (dir > 0) {
        left = std::max(left, x - step / 2);
        right = next;
      } else {
        left = next;
        right = x + step / 2;
      }
      break;
    }
    x = next;
    gx = gn;
    step *= 2.0;
  }
  if (!std::isfinite(right)) throw QuadratureError("integrand has no interior peak");
  if (!std::isfinite(left)) left = x - step;
  // Golden-section search.
  constexpr double kPhi = 0.6180339887498949;
  double a = left, b = right;
  double c = b - kPhi * (b - a), d = a + kPhi * (b - a);
  double gc = safe(g(c)), gd = safe(g(d));
  for (int it = 0; it < 200 && (b - a) > 1e-12 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kPhi * (b - a);
      gc = safe(g(c));
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kPhi * (b - a);
      gd = safe(g(d));
    }
  }
  return 0.5 * (a + b);
}

// Point beyond which g stays below `level`, searching from `peak` in direction dir.
double window_edge(const std::function<double(double)>& g, double peak, double level, int dir,
                   double lower) {
  double inside = peak;
  double w = 1.0;
  double outside = peak + dir * w;
  for (int it = 0; it < 200; ++it) {
    if (dir < 0 && outside <= lower) return lower;
    if (safe(g(outside)) < level) break;
    inside = outside;
    w *= 2.0;
    outside = peak + dir * w;
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (inside + outside);
    if (safe(g(mid)) < level) {
      outside = mid;
    } else {
      inside = mid;
    }
  }
  return outside;
}

enum class Family { Cross, Simplex };

using CacheKey = std::tuple<int, int, int, double, double, int, double>;

std::shared_mutex g_cache_mutex;
std::map<CacheKey, IntegralValue> g_cache;
std::atomic<long> g_cache_misses{0};

// ∫ e^{−x²} h(x/√scale_sq)^k dx with h = erf on (0,∞) or h = (1+erf)/2 on ℝ.
IntegralValue base_integral(Family family, int k, int scale_sq, double abs_tol,
                            const QuadratureConfig& cfg) {
  const CacheKey key{static_cast<int>(family), k,   scale_sq,
                     abs_tol,                  cfg.rel_tol, cfg.max_subdivisions,
                     cfg.truncation_radius};
  {
    std::shared_lock lock(g_cache_mutex);
    if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  }
  const double inv_scale = 1.0 / std::sqrt(static_cast<double>(scale_sq));
  std::function<double(double)> log_f;
  double lower;
  if (family == Family::Cross) {
    lower = 0.0;
    log_f = [k, inv_scale](double x) {
      if (k == 0) return -x * x;
      if (x <= 0.0) return -kInf;
      return -x * x + k * std::log(specfun::erf(x * inv_scale));
    };
  } else {
    lower = -kInf;
    log_f = [k, inv_scale](double x) {
      if (k == 0) return -x * x;
      return -x * x + k * specfun::log_half_erfc_neg(x * inv_scale);
    };
  }
  QuadratureConfig local = cfg;
  local.abs_tol = abs_tol;
  const IntegralValue v = integrate_log_concave(log_f, lower, local);
  ++g_cache_misses;
  std::unique_lock lock(g_cache_mutex);
  g_cache.emplace(key, v);
  return v;
}

IntegralValue scaled(IntegralValue v, double factor) {
  return {v.value * factor, v.error_estimate * factor};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("QuadratureConfig: abs_tol must be positive");
  if (!(rel_tol >= 0.0)) throw DomainError("QuadratureConfig: rel_tol must be nonnegative");
  if (!(truncation_radius >= 6.0)) {
    throw DomainError("QuadratureConfig: truncation_radius must be >= 6");
  }
  if (max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
}

IntegralValue integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                 double abs_tol, double rel_tol, int max_subdivisions) {
  auto worst_first = [](const Segment& x, const Segment& y) { return x.error < y.error; };
  std::vector<Segment> heap{kronrod21(f, a, b)};
  double total = heap.front().result;
  double error = heap.front().error;
  for (int it = 1; it < max_subdivisions; ++it) {
    if (error <= std::max(abs_tol, rel_tol * std::abs(total))) break;
    std::pop_heap(heap.begin(), heap.end(), worst_first);
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment s1 = kronrod21(f, worst.a, mid);
    const Segment s2 = kronrod21(f, mid, worst.b);
    heap.push_back(s1);
    std::push_heap(heap.begin(), heap.end(), worst_first);
    heap.push_back(s2);
    std::push_heap(heap.begin(), heap.end(), worst_first);
    // Re-sum rather than update incrementally so cancellation does not drift.
    total = 0.0;
    error = 0.0;
    for (const auto& s : heap) {
      total += s.result;
      error += s.error;
    }
  }
  if (error > std::max(abs_tol, rel_tol * std::abs(total))) {
    throw QuadratureError("adaptive quadrature did not converge on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "], error estimate " + std::to_string(error));
  }
  return {total, error};
}

IntegralValue integrate_log_concave(const std::function<double(double)>& log_f, double lower,
                                    const QuadratureConfig& cfg) {
  cfg.validate();
  const double peak = locate_peak(log_f, lower);
  const double peak_log = safe(log_f(peak));
  if (!std::isfinite(peak_log)) throw QuadratureError("integrand vanishes at its peak");
  const double drop = cfg.truncation_radius * cfg.truncation_radius;
  const double level = peak_log - drop;
  const double lo = window_edge(log_f, peak, level, -1, lower);
  const double hi = window_edge(log_f, peak, level, +1, lower);
  const double scale = std::exp(peak_log);
  const auto g = [&](double x) { return std::exp(safe(log_f(x)) - peak_log); };
  // The rescaled integral is O(window width), so the relative target is always
  // reachable; demand it as well as the absolute one.
  const double rough = std::abs(kronrod21(g, lo, hi).result);
  double scaled_tol = scale > 0.0 ? cfg.abs_tol / scale : kInf;
  if (cfg.rel_tol > 0.0) scaled_tol = std::min(scaled_tol, cfg.rel_tol * rough);
  IntegralValue v = integrate_adaptive(g, lo, hi, scaled_tol, cfg.rel_tol, cfg.max_subdivisions);
  // Concavity bounds each tail by e^{-drop} times the distance to the peak over drop.
  double tail = 0.0;
  if (hi > peak) tail += std::exp(-drop) * (hi - peak) / drop;
  if (lo < peak && lo > lower) tail += std::exp(-drop) * (peak - lo) / drop;
  return {v.value * scale, (v.error_estimate + tail) * scale};
}

IntegralValue gamma_cross(int n, int l, const QuadratureConfig& cfg) {
  if (n < 1 || l < 0 || l > n - 1) {
    throw DomainError("gamma_cross: need 0 <= l <= n-1, got n=" + std::to_string(n) +
                      ", l=" + std::to_string(l));
  }
  const double factor = 1.0 / std::sqrt(std::numbers::pi);
  return scaled(base_integral(Family::Cross, n - l - 1, l + 1, cfg.abs_tol / factor, cfg), factor);
}

IntegralValue gamma_simplex(int n, int l, const QuadratureConfig& cfg) {
  if (n < 1 || l < 0 || l > n) {
    throw DomainError("gamma_simplex: need 0 <= l <= n, got n=" + std::to_string(n) +
                      ", l=" + std::to_string(l));
  }
  const double factor = 1.0 / std::sqrt(std::numbers::pi);
  return scaled(base_integral(Family::Simplex, n - l, l + 1, cfg.abs_tol / factor, cfg), factor);
}

IntegralValue i_cross(int n, int l, const QuadratureConfig& cfg) {
  if (n < 1 || l < 1 || l > n) {
    throw DomainError("i_cross: need 1 <= l <= n, got n=" + std::to_string(n) +
                      ", l=" + std::to_string(l));
  }
  const double factor = 2.0 / std::sqrt(std::numbers::pi);
  return scaled(base_integral(Family::Cross, l - 1, n - l + 1, cfg.abs_tol / factor, cfg), factor);
}

IntegralValue i_simplex(int n, int l, const QuadratureConfig& cfg) {
  if (n < 1 || l < 0 || l > n) {
    throw DomainError("i_simplex: need 0 <= l <= n, got n=" + std::to_string(n) +
                      ", l=" + std::to_string(l));
  }
  const double factor = 1.0 / std::sqrt(std::numbers::pi);
  return scaled(base_integral(Family::Simplex, l, n - l + 1, cfg.abs_tol / factor, cfg), factor);
}

double i_cross_asymptotic(int n, int l) {
  if (l < 1 || n < 1) throw DomainError("i_cross_asymptotic: need l >= 1, n >= 1");
  const double log_value = -std::log(2.0) + l * std::log(2.0 / std::sqrt(std::numbers::pi)) -
                           0.5 * (l - 1) * std::log(static_cast<double>(n)) +
                           specfun::log_gamma(0.5 * l);
  return std::exp(log_value);
}

double i_simplex_asymptotic(int l) {
  if (l < 0) throw DomainError("i_simplex_asymptotic: need l >= 0");
  return std::ldexp(1.0, -l);
}

long quadrature_cache_misses() { return g_cache_misses.load(); }

}  // namespace steiner
