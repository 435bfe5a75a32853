#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "steiner/errors.hpp"
#include "steiner/limits.hpp"
#include "steiner/mc_oracle.hpp"
#include "steiner/serialize.hpp"
#include "steiner/zeros.hpp"

namespace steiner::cli {

namespace {

constexpr const char* kUnits =
    "Units: --rho (the size parameter of the body) and --t (the tube radius) are lengths in\n"
    "one common unit; tau = sigma_K * t is dimensionless, and --radius is a radius |tau| in\n"
    "that dimensionless variable.";

constexpr const char* kThreadsEnv = "STEINER_THREADS";

struct Options {
  std::string family;
  std::string dim;
  std::vector<int> dims;
  double rho = 1.0;
  std::string format = "json";
  std::string output;
  QuadratureConfig quad;
  RootConfig roots;
  double imag_tol = 1e-8;
  std::string coefficients = "auto";
  double radius = 1.0;
  int circle_samples = 256;
  std::vector<double> t_grid;
  McConfig mc;
};

BodyKind family_of(const Options& o) { return parse_body_kind(o.family); }

void add_family(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "ball | cube | crosspolytope | simplex")
      ->required()
      ->check(CLI::IsMember({"ball", "cube", "crosspolytope", "cross-polytope", "cross", "simplex"}));
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", o.output, "Write to this file instead of standard output");
}

void add_quadrature(CLI::App* cmd, Options& o) {
  cmd->add_option("--abs-tol", o.quad.abs_tol, "Quadrature absolute tolerance")
      ->capture_default_str();
  cmd->add_option("--rel-tol", o.quad.rel_tol, "Quadrature relative tolerance")
      ->capture_default_str();
  cmd->add_option("--max-subdivisions", o.quad.max_subdivisions,
                  "Quadrature subdivision limit")
      ->capture_default_str();
  cmd->add_option("--truncation-radius", o.quad.truncation_radius,
                  "Integration window in Gaussian standard units (>= 6)")
      ->capture_default_str();
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Json zeros_summary_row(int n, const ZeroLocationReport& r) {
  Json row;
  row["n"] = n;
  row["max_real_part"] = format_number(r.max_real_part);
  row["max_abs_imag"] = format_number(r.max_abs_imag_among_roots);
  row["all_negative_real"] = r.all_negative_real;
  row["all_left_half_plane"] = r.all_left_half_plane;
  row["resolved_nonreal"] = r.resolved_nonreal;
  return row;
}

bool use_exact_coefficients(const Options& o, BodyKind kind) {
  const bool elementary = kind == BodyKind::Ball || kind == BodyKind::Cube;
  if (o.coefficients == "exact" && !elementary) {
    throw DomainError("--coefficients exact is only available for ball and cube");
  }
  return o.coefficients == "exact" || (o.coefficients == "auto" && elementary);
}

std::string cmd_coeffs(const Options& o) {
  const FamilyInstance body{family_of(o), o.dims.front(), o.rho};
  const CoefficientTable table = coefficient_table(body, o.quad);
  return o.format == "json" ? render(to_json(table)) : to_csv(table);
}

std::string cmd_zeros(const Options& o) {
  const BodyKind kind = family_of(o);
  const bool exact = use_exact_coefficients(o, kind);
  Json results = Json::array();
  Json summary = Json::array();
  std::ostringstream csv;
  csv << "n,max_real_part,max_abs_imag,all_negative_real,all_left_half_plane,resolved_nonreal,"
         "precision_used\r\n";
  for (int n : o.dims) {
    RootSet rs;
    try {
      rs = exact ? find_roots(exact_renormalized_coefficients(kind, n), o.roots)
                 : find_roots(renormalized({kind, n, 1.0}, o.quad), o.roots);
    } catch (const RootFindingError& e) {
      throw RootFindingError("n = " + std::to_string(n) + ": " + e.what(), e.best_iterate());
    }
    const ZeroLocationReport report = classify_zeros(rs, o.imag_tol);
    Json entry;
    entry["n"] = n;
    entry["roots"] = to_json(rs);
    entry["report"] = to_json(report);
    results.push_back(std::move(entry));
    summary.push_back(zeros_summary_row(n, report));
    csv << n << ',' << format_number(report.max_real_part) << ','
        << format_number(report.max_abs_imag_among_roots) << ','
        << (report.all_negative_real ? "true" : "false") << ','
        << (report.all_left_half_plane ? "true" : "false") << ',' << report.resolved_nonreal << ','
        << csv_field(rs.precision_used) << "\r\n";
  }
  if (o.format == "csv") return csv.str();
  Json j;
  j["kind"] = std::string(to_string(kind));
  j["coefficient_source"] = exact ? "exact" : "pipeline";
  j["imag_tol"] = format_number(o.imag_tol);
  j["summary"] = std::move(summary);
  j["results"] = std::move(results);
  return render(j);
}

std::string cmd_converge(const Options& o) {
  const ConvergenceProfile profile =
      convergence_profile(family_of(o), o.dims, o.radius, o.circle_samples, o.quad);
  return o.format == "json" ? render(to_json(profile)) : to_csv(profile);
}

std::string cmd_mc_validate(const Options& o, bool& all_ok) {
  const FamilyInstance body{family_of(o), o.dims.front(), o.rho};
  const ValidationTable table = validate_family(body, o.t_grid, o.mc, o.quad);
  all_ok = table.all_within_limit();
  return o.format == "json" ? render(to_json(table)) : to_csv(table);
}

unsigned default_threads() {
  const char* env = std::getenv(kThreadsEnv);
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw DomainError(std::string(kThreadsEnv) + " must be a nonnegative integer");
  return static_cast<unsigned>(v);
}

}  // namespace

std::vector<int> parse_dim_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw DomainError("invalid dimension '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  std::vector<int> dims;
  if (dots == std::string::npos) {
    dims.push_back(parse_int(text));
  } else {
    const int a = parse_int(text.substr(0, dots));
    const int b = parse_int(text.substr(dots + 2));
    if (b < a) throw DomainError("empty dimension range '" + text + "'");
    for (int n = a; n <= b; ++n) dims.push_back(n);
  }
  for (int n : dims) {
    if (n < 1) throw DomainError("dimension must be >= 1, got " + std::to_string(n));
  }
  return dims;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner-Minkowski polynomials of balls, cubes, cross-polytopes and simplexes",
               "steiner"};
  app.footer(kUnits);
  app.require_subcommand(1);
  Options o;

  auto* coeffs = app.add_subcommand("coeffs", "Coefficient table m_l, W_l, V_l, c_l, mu_l");
  add_family(coeffs, o);
  coeffs->add_option("--dim", o.dim, "Dimension n >= 1")->required();
  coeffs->add_option("--rho", o.rho, "Size parameter rho > 0 (length)")->capture_default_str();
  add_format(coeffs, o);
  add_quadrature(coeffs, o);
  coeffs->footer(kUnits);

  auto* zeros = app.add_subcommand("zeros", "Zeros of the renormalized polynomial in tau");
  add_family(zeros, o);
  zeros->add_option("--dim", o.dim, "Dimension n or inclusive range a..b")->required();
  zeros->add_option("--coefficients", o.coefficients,
                    "auto: exact (50-digit) coefficients for ball and cube, quadrature pipeline "
                    "otherwise; exact; pipeline")
      ->check(CLI::IsMember({"auto", "exact", "pipeline"}))
      ->capture_default_str();
  zeros->add_option("--imag-tol", o.imag_tol,
                    "A zero is real when |Im z| <= imag-tol * (1 + |z|)")
      ->capture_default_str();
  zeros->add_option("--residual-tol", o.roots.residual_tol,
                    "Accepted relative residual |p(z)| / sum |c_l||z|^l")
      ->capture_default_str();
  zeros->add_option("--max-iterations", o.roots.max_iterations, "Aberth iterations per precision")
      ->capture_default_str();
  add_format(zeros, o);
  add_quadrature(zeros, o);
  zeros->footer(kUnits);

  auto* converge = app.add_subcommand(
      "converge", "Sup distance on |tau| = radius between the polynomial and its limit function");
  add_family(converge, o);
  converge->add_option("--dims", o.dims, "Strictly increasing dimensions, e.g. 10,100,1000")
      ->required()
      ->delimiter(',');
  converge->add_option("--radius", o.radius, "Circle radius |tau| >= 0 (dimensionless)")
      ->capture_default_str();
  converge->add_option("--samples", o.circle_samples, "Points on the circle (>= 64)")
      ->capture_default_str();
  add_format(converge, o);
  add_quadrature(converge, o);
  converge->footer(kUnits);

  auto* mc = app.add_subcommand(
      "mc-validate", "Compare M_K(t) with a Monte Carlo estimate of Vol(K + tB)");
  add_family(mc, o);
  mc->add_option("--dim", o.dim, "Dimension 1 <= n <= 6")->required();
  mc->add_option("--rho", o.rho, "Size parameter rho > 0 (length)")->capture_default_str();
  mc->add_option("--t", o.t_grid, "Tube radii t >= 0 (length), comma separated")
      ->required()
      ->delimiter(',');
  mc->add_option("--samples", o.mc.samples, "Monte Carlo samples per t")->capture_default_str();
  mc->add_option("--seed", o.mc.seed, "Random seed")->capture_default_str();
  mc->add_option("--chunk-size", o.mc.chunk_size, "Samples per random substream")
      ->capture_default_str();
  mc->add_option("--threads", o.mc.threads,
                 std::string("Worker threads (0 = all cores; default from ") + kThreadsEnv + ")");
  add_format(mc, o);
  add_quadrature(mc, o);
  mc->footer(kUnits);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    o.mc.threads = default_threads();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  std::string text;
  int code = kOk;
  try {
    // Argument checks first, so bad input is a usage error before any work.
    o.quad.validate();
    if (!o.dim.empty()) o.dims = parse_dim_range(o.dim);
    if ((coeffs->parsed() || mc->parsed()) && o.dims.size() != 1) {
      throw DomainError("--dim must be a single dimension for this command");
    }
    if (coeffs->parsed() || mc->parsed()) FamilyInstance{family_of(o), o.dims.front(), o.rho}.validate();
    if (mc->parsed()) {
      o.mc.validate();
      if (o.dims.front() > kMaxValidationDim) {
        throw DomainError("mc-validate supports n <= " + std::to_string(kMaxValidationDim));
      }
    }
    if (zeros->parsed()) use_exact_coefficients(o, family_of(o));
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (coeffs->parsed()) {
      text = cmd_coeffs(o);
    } else if (zeros->parsed()) {
      text = cmd_zeros(o);
    } else if (converge->parsed()) {
      text = cmd_converge(o);
    } else {
      bool all_ok = true;
      text = cmd_mc_validate(o, all_ok);
      if (!all_ok) {
        err << "validation failed: some |z| exceeds " << kZScoreLimit << "\n";
        code = kValidation;
      }
    }
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const QuadratureError& e) {
    err << "quadrature failure: " << e.what() << "\n";
    return kQuadrature;
  } catch (const RootFindingError& e) {
    err << "root finding failure: " << e.what() << "\n";
    return kRoots;
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }

  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write " << o.output << "\n";
      return kInternal;
    }
  }
  return code;
}

}  // namespace steiner::cli
