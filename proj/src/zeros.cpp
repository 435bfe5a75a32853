#include "steiner/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "steiner/errors.hpp"
#include "steiner/precision.hpp"

namespace steiner {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// p(τ) = |c_0| · Σ b_l uˡ with τ = s·u and s chosen so that |b_0| = |b_n| = 1.
struct ScaledPolynomial {
  double s = 1.0;
  double log_abs_c0 = 0.0;
  std::vector<WideFloat> b;
  // Relative accuracy of the b_l as data.
  double coefficient_rel_error = 0.0;

  int degree() const { return static_cast<int>(b.size()) - 1; }
};

void check_ends(int n, bool c0_nonzero, bool cn_nonzero) {
  if (n < 1) throw DomainError("find_roots: polynomial degree must be >= 1");
  if (!c0_nonzero || !cn_nonzero) {
    throw DomainError("find_roots: leading and constant coefficients must be nonzero");
  }
}

ScaledPolynomial make_scaled(const std::vector<double>& log_abs, const std::vector<int>& signs,
                             double rel_error) {
  const int n = static_cast<int>(log_abs.size()) - 1;
  check_ends(n, n >= 0 && std::isfinite(log_abs.front()), n >= 0 && std::isfinite(log_abs.back()));
  ScaledPolynomial sp;
  const double log_s = (log_abs.front() - log_abs.back()) / n;
  sp.s = std::exp(log_s);
  sp.log_abs_c0 = log_abs.front();
  sp.coefficient_rel_error = rel_error;
  sp.b.resize(n + 1);
  for (int l = 0; l <= n; ++l) {
    sp.b[l] = std::isfinite(log_abs[l])
                  ? signs[l] * std::exp(log_abs[l] + l * log_s - sp.log_abs_c0)
                  : 0.0;
  }
  return sp;
}

ScaledPolynomial make_scaled(const RenormalizedPolynomial& poly, double rel_error) {
  std::vector<int> signs(poly.log_coefficients().size(), 1);
  return make_scaled(poly.log_coefficients(), signs, rel_error);
}

ScaledPolynomial make_scaled(const std::vector<double>& c, double rel_error) {
  std::vector<double> log_abs(c.size());
  std::vector<int> signs(c.size());
  for (std::size_t l = 0; l < c.size(); ++l) {
    log_abs[l] = c[l] == 0.0 ? kNegInf : std::log(std::abs(c[l]));
    signs[l] = c[l] < 0.0 ? -1 : 1;
  }
  return make_scaled(log_abs, signs, rel_error);
}

ScaledPolynomial make_scaled(const std::vector<WideFloat>& c, double rel_error) {
  const int n = static_cast<int>(c.size()) - 1;
  check_ends(n, n >= 0 && c.front() != 0, n >= 0 && c.back() != 0);
  ScaledPolynomial sp;
  const WideFloat c0 = abs(c.front());
  const WideFloat s = pow(c0 / abs(c.back()), WideFloat(1) / n);
  sp.s = s.convert_to<double>();
  sp.log_abs_c0 = log(c0).convert_to<double>();
  sp.coefficient_rel_error = rel_error;
  sp.b.resize(n + 1);
  WideFloat power = 1;
  for (int l = 0; l <= n; ++l) {
    sp.b[l] = c[l] * power / c0;
    power *= s;
  }
  return sp;
}

// Coefficients rounded to the working type, plus |b_l| in double for scales.
template <class T>
struct Coefficients {
  std::vector<T> b;
  std::vector<double> abs_b;
};

template <class T>
Coefficients<T> coefficients_as(const std::vector<WideFloat>& b) {
  Coefficients<T> c;
  c.b.reserve(b.size());
  c.abs_b.reserve(b.size());
  for (const auto& x : b) {
    c.b.push_back(narrow<T>(x));
    c.abs_b.push_back(std::abs(x.convert_to<double>()));
  }
  return c;
}

// Newton correction p/p', relative residual |p|/Σ|b||z|ˡ and ln Σ|b||z|ˡ at z.
template <class T>
struct PointEval {
  Complex<T> newton;
  double eta;
  double log_scale;
};

template <class T>
PointEval<T> evaluate_at(const Coefficients<T>& c, const Complex<T>& z) {
  const int n = static_cast<int>(c.b.size()) - 1;
  const double mod = magnitude(z);
  const bool reversed = mod > 1.0;
  Complex<T> x = z;
  double xa = mod;
  if (reversed) {
    x = Complex<T>(T(1.0)) / z;
    xa = 1.0 / mod;
  }
  Complex<T> p(T(0.0)), dp(T(0.0));
  double scale = 0.0;
  for (int k = 0; k <= n; ++k) {
    const int idx = reversed ? k : n - k;
    dp = dp * x + p;
    p = p * x + Complex<T>(c.b[idx]);
    scale = scale * xa + c.abs_b[idx];
  }
  PointEval<T> out;
  out.eta = magnitude(p) / scale;
  out.log_scale = std::log(scale) + (reversed ? n * std::log(mod) : 0.0);
  if (!reversed) {
    out.newton = p / dp;
  } else {
    // p(z) = zⁿq(1/z) ⇒ p/p' = z·q / (n·q − y·q').
    const Complex<T> denom = p * T(static_cast<double>(n)) - x * dp;
    out.newton = (z * p) / denom;
  }
  return out;
}

template <class T>
Complex<T> to_working(std::complex<double> z) {
  return {T(z.real()), T(z.imag())};
}

template <class T>
double noise_level(int n) {
  return 4.0 * (n + 1) * unit_roundoff<T>();
}

// Upper convex hull of (l, ln|b_l|) gives circle radii and counts for starting points.
std::vector<std::complex<double>> newton_polygon_start(const std::vector<WideFloat>& b) {
  const int n = static_cast<int>(b.size()) - 1;
  std::vector<double> y(n + 1, kNegInf);
  for (int l = 0; l <= n; ++l) {
    if (b[l] != 0) y[l] = log(abs(b[l])).convert_to<double>();
  }
  std::vector<int> hull;
  for (int l = 0; l <= n; ++l) {
    if (!std::isfinite(y[l])) continue;
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2], j = hull.back();
      // Drop j when it lies on or below the chord from i to l.
      if ((y[j] - y[i]) * (l - i) <= (y[l] - y[i]) * (j - i)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(l);
  }
  std::vector<std::complex<double>> start;
  start.reserve(n);
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int i = hull[e], k = hull[e + 1];
    const int m = k - i;
    const double radius = std::exp((y[i] - y[k]) / m);
    for (int j = 0; j < m; ++j) {
      const double angle = 2.0 * std::numbers::pi * (j + 0.25) / m + 0.7 + 0.3 * e;
      start.push_back(std::polar(radius, angle));
    }
  }
  return start;
}

template <class T>
struct AberthResult {
  std::vector<Complex<T>> z;
  int iterations = 0;
};

template <class T>
AberthResult<T> aberth(const Coefficients<T>& c, const std::vector<std::complex<double>>& start,
                       int max_iterations) {
  const int n = static_cast<int>(c.b.size()) - 1;
  AberthResult<T> out;
  out.z.reserve(n);
  for (const auto& s : start) out.z.push_back(to_working<T>(s));
  std::vector<bool> done(n, false);
  const double noise = noise_level<T>(n);
  const double step_floor = 4.0 * unit_roundoff<T>();
  const Complex<T> one(T(1.0));
  for (int it = 0; it < max_iterations; ++it) {
    out.iterations = it + 1;
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const PointEval<T> ev = evaluate_at(c, out.z[i]);
      if (ev.eta <= noise) {
        done[i] = true;
        continue;
      }
      Complex<T> sum(T(0.0));
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += one / (out.z[i] - out.z[j]);
      }
      const Complex<T> w = ev.newton / (one - ev.newton * sum);
      out.z[i] -= w;
      if (magnitude(w) <= step_floor * magnitude(out.z[i])) done[i] = true;
      all_done = false;
    }
    if (all_done) break;
  }
  return out;
}

int find_set(std::vector<int>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Coefficients of p^{(k)}/k!, i.e. d_l = C(l + k, k)·b_{l+k}.
template <class T>
Coefficients<T> derivative_coefficients(const Coefficients<T>& c, int k) {
  const int n = static_cast<int>(c.b.size()) - 1;
  Coefficients<T> d;
  d.b.resize(n - k + 1);
  d.abs_b.resize(n - k + 1);
  for (int l = 0; l <= n - k; ++l) {
    T binom(1.0);
    double binom_d = 1.0;
    for (int i = 1; i <= k; ++i) {
      binom = binom * T(static_cast<double>(l + i)) / T(static_cast<double>(i));
      binom_d = binom_d * (l + i) / i;
    }
    d.b[l] = c.b[l + k] * binom;
    d.abs_b[l] = c.abs_b[l + k] * binom_d;
  }
  return d;
}

// Newton on p^{(m−1)}/(m−1)! from `guess`; its simple zero is the centre of an
// m-fold cluster. Empty when Newton leaves the cluster disc.
template <class T>
std::optional<Complex<T>> refine_cluster_centre(const Coefficients<T>& c, int m,
                                                Complex<T> guess, double cluster_radius) {
  const Coefficients<T> d = derivative_coefficients(c, m - 1);
  Complex<T> z = guess;
  for (int it = 0; it < 100; ++it) {
    const PointEval<T> ev = evaluate_at(d, z);
    z -= ev.newton;
    if (magnitude(ev.newton) <= 4.0 * unit_roundoff<T>() * (1.0 + magnitude(z))) break;
  }
  if (!(magnitude(z - guess) <= 2.0 * cluster_radius)) return std::nullopt;
  return z;
}

// True when p^{(k)}(z)/k! is within `level` of its own scale for every
// k < m, i.e. z is a root of multiplicity m of a polynomial whose coefficients
// differ from b by a relative amount of order `level`.
template <class T>
bool plausible_multiple_root(const Coefficients<T>& c, const Complex<T>& z, int m, double level) {
  for (int k = 0; k < m; ++k) {
    if (!(evaluate_at(derivative_coefficients(c, k), z).eta <= level)) return false;
  }
  return true;
}

// Precision used to certify a result computed in T.
template <class T>
struct Doubled;
template <>
struct Doubled<double> {
  using type = DoubleDouble;
};
template <>
struct Doubled<DoubleDouble> {
  using type = WideFloat;
};
template <>
struct Doubled<WideFloat> {
  using type = CertFloat;
};

template <class T>
const char* precision_name();
template <>
const char* precision_name<double>() { return "double"; }
template <>
const char* precision_name<DoubleDouble>() { return "double-double"; }
template <>
const char* precision_name<WideFloat>() { return "wide (50 digits)"; }

struct Assembled {
  RootSet roots;
  bool certified = false;
  double worst_residual = 0.0;
};

template <class T>
Assembled assemble(const ScaledPolynomial& sp, const Coefficients<T>& c, const AberthResult<T>& ar,
                   const RootConfig& cfg) {
  using U = typename Doubled<T>::type;
  const int n = sp.degree();
  const double noise = noise_level<T>(n);
  const double data_level = noise + sp.coefficient_rel_error;
  const double log_bn = std::log(c.abs_b[n]);
  const auto& z = ar.z;
  // Inclusion radii n·|p(z_i)| / (|b_n| ∏|z_i − z_j|), once with rounding noise
  // only and once widened by the coefficient uncertainty.
  std::vector<double> tight(n), wide(n);
  for (int i = 0; i < n; ++i) {
    double log_prod = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) log_prod += std::log(magnitude(z[i] - z[j]));
    }
    const PointEval<T> ev = evaluate_at(c, z[i]);
    const double base = std::log(static_cast<double>(n)) + ev.log_scale - log_bn - log_prod;
    tight[i] = std::exp(base + std::log(std::max(ev.eta, noise)));
    wide[i] = std::exp(base + std::log(ev.eta + data_level));
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  if (cfg.collapse_clusters) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (magnitude(z[i] - z[j]) <= wide[i] + wide[j]) {
          parent[find_set(parent, i)] = find_set(parent, j);
        }
      }
    }
  }
  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[find_set(parent, i)].push_back(i);

  // (centre, multiplicity, error radius) per distinct root.
  struct Distinct {
    Complex<T> centre;
    int m;
    double radius;
    double data_radius;
  };
  std::vector<Distinct> distinct;
  int clusters = 0;
  const double multiple_root_level = 8.0 * (n + 1) * data_level;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    const int m = static_cast<int>(g.size());
    if (m > 1) {
      Complex<T> sum(T(0.0));
      for (int i : g) sum += z[i];
      const Complex<T> mean = sum * (T(1.0) / T(static_cast<double>(m)));
      double radius = 0.0;
      for (int i : g) radius = std::max(radius, magnitude(z[i] - mean) + wide[i]);
      const auto centre = refine_cluster_centre(c, m, mean, radius);
      if (centre && plausible_multiple_root(c, *centre, m, multiple_root_level)) {
        ++clusters;
        distinct.push_back({*centre, m, radius, radius});
        continue;
      }
    }
    for (int i : g) distinct.push_back({z[i], 1, tight[i], wide[i]});
  }

  const Coefficients<U> cu = coefficients_as<U>(sp.b);
  const double c0 = std::exp(sp.log_abs_c0);
  Assembled out;
  RootSet& rs = out.roots;
  out.certified = true;
  for (const auto& d : distinct) {
    const std::complex<double> root(to_double(d.centre.re) * sp.s, to_double(d.centre.im) * sp.s);
    // Both residuals are taken at the reported (double) root.
    const std::complex<double> u = root / sp.s;
    const PointEval<T> ew = evaluate_at(c, to_working<T>(u));
    const double eta = std::max(ew.eta, noise);
    const double eta_cert = evaluate_at(cu, to_working<U>(u)).eta;
    const double scale = c0 * std::exp(ew.log_scale);
    if (!(eta <= cfg.residual_tol) || !(eta_cert <= 10.0 * eta)) out.certified = false;
    out.worst_residual = std::max(out.worst_residual, eta);
    // Members of a cluster are stored contiguously.
    for (int k = 0; k < d.m; ++k) {
      rs.roots.push_back(root);
      rs.scales.push_back(scale);
      rs.residuals.push_back(eta * scale);
      rs.certificate_residuals.push_back(eta_cert * scale);
      rs.error_bounds.push_back(d.radius * sp.s);
      rs.data_error_bounds.push_back(d.data_radius * sp.s);
      rs.multiplicities.push_back(d.m);
    }
  }
  std::ostringstream desc;
  desc << precision_name<T>() << ", tau = " << sp.s << " * u";
  if (clusters > 0) desc << ", " << clusters << " cluster(s) collapsed";
  rs.precision_used = desc.str();
  return out;
}

template <class T>
Assembled run_rung(const ScaledPolynomial& sp, std::vector<std::complex<double>>& start,
                   const RootConfig& cfg, int& iterations) {
  const Coefficients<T> c = coefficients_as<T>(sp.b);
  const AberthResult<T> ar = aberth(c, start, cfg.max_iterations);
  iterations = ar.iterations;
  for (std::size_t i = 0; i < start.size(); ++i) {
    start[i] = {to_double(ar.z[i].re), to_double(ar.z[i].im)};
  }
  return assemble(sp, c, ar, cfg);
}

RootSet solve(const ScaledPolynomial& sp, const RootConfig& cfg) {
  const int n = sp.degree();
  std::vector<std::complex<double>> start = newton_polygon_start(sp.b);
  // First rung: the cheapest precision that is not coarser than the data.
  int rung = 2;
  if (sp.coefficient_rel_error >= unit_roundoff<DoubleDouble>()) rung = 1;
  if (rung == 1 && n <= cfg.double_max_degree &&
      sp.coefficient_rel_error >= unit_roundoff<double>()) {
    rung = 0;
  }
  Assembled best;
  int iterations = 0;
  for (; rung <= 2; ++rung) {
    switch (rung) {
      case 0: best = run_rung<double>(sp, start, cfg, iterations); break;
      case 1: best = run_rung<DoubleDouble>(sp, start, cfg, iterations); break;
      default: best = run_rung<WideFloat>(sp, start, cfg, iterations); break;
    }
    if (best.certified) return best.roots;
  }
  std::ostringstream msg;
  msg << "root finder did not converge: worst relative residual " << best.worst_residual
      << " after " << iterations << " iterations (" << best.roots.precision_used << ")";
  throw RootFindingError(msg.str(), best.roots);
}

template <class T>
double relative_residual(const ScaledPolynomial& sp, std::complex<double> z) {
  return evaluate_at(coefficients_as<T>(sp.b), to_working<T>(z / sp.s)).eta;
}

}  // namespace

RootSet find_roots(const RenormalizedPolynomial& poly, const RootConfig& cfg) {
  return solve(make_scaled(poly, cfg.coefficient_rel_error), cfg);
}

RootSet find_roots(const std::vector<double>& coefficients, const RootConfig& cfg) {
  return solve(make_scaled(coefficients, cfg.coefficient_rel_error), cfg);
}

RootSet find_roots(const std::vector<WideFloat>& coefficients, const RootConfig& cfg) {
  return solve(make_scaled(coefficients, cfg.wide_coefficient_rel_error), cfg);
}

double relative_residual_dd(const std::vector<double>& coefficients, std::complex<double> z) {
  return relative_residual<DoubleDouble>(make_scaled(coefficients, 0.0), z);
}

double relative_residual_dd(const RenormalizedPolynomial& poly, std::complex<double> z) {
  return relative_residual<DoubleDouble>(make_scaled(poly, 0.0), z);
}

double relative_residual_wide(const std::vector<WideFloat>& coefficients, std::complex<double> z) {
  return relative_residual<CertFloat>(make_scaled(coefficients, 0.0), z);
}

ZeroLocationReport classify_zeros(const RootSet& rs, double imag_tol) {
  ZeroLocationReport report;
  report.all_negative_real = true;
  report.all_left_half_plane = true;
  report.max_real_part = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const auto r = rs.roots[i];
    const bool real = std::abs(r.imag()) <= imag_tol * (1.0 + std::abs(r));
    if (!(r.real() < 0.0)) {
      report.all_left_half_plane = false;
      report.all_negative_real = false;
    }
    if (!real) {
      report.all_negative_real = false;
      if (i < rs.data_error_bounds.size() && std::abs(r.imag()) > rs.data_error_bounds[i]) {
        ++report.resolved_nonreal;
      }
    }
    report.max_real_part = std::max(report.max_real_part, r.real());
    report.max_abs_imag_among_roots = std::max(report.max_abs_imag_among_roots, std::abs(r.imag()));
  }
  for (std::size_t i = 0; i < rs.multiplicities.size(); ++i) {
    if (rs.multiplicities[i] > 1) {
      ++report.clusters;
      i += rs.multiplicities[i] - 1;
    }
  }
  return report;
}

}  // namespace steiner
