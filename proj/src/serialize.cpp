#include "steiner/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

Json number_array(const std::vector<double>& values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(format_number(v));
  return arr;
}

std::vector<double> parse_array(const Json& arr) {
  std::vector<double> out;
  for (const auto& v : arr) out.push_back(parse_number(v.get<std::string>()));
  return out;
}

FamilyInstance instance_from_json(const Json& j) {
  FamilyInstance body;
  body.kind = parse_body_kind(j.at("kind").get<std::string>());
  body.n = j.at("n").get<int>();
  body.rho = parse_number(j.at("rho").get<std::string>());
  return body;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_number(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw DomainError("not a decimal number: '" + s + "'");
  return v;
}

Json to_json(const FamilyInstance& body) {
  Json j;
  j["kind"] = std::string(to_string(body.kind));
  j["n"] = body.n;
  j["rho"] = format_number(body.rho);
  return j;
}

Json to_json(const MinkowskiPolynomial& poly) {
  Json j;
  j["type"] = "minkowski";
  j.update(to_json(poly.provenance()));
  j["coefficients"] = number_array(poly.coefficients());
  j["log_coefficients"] = number_array(poly.log_coefficients());
  return j;
}

MinkowskiPolynomial minkowski_from_json(const Json& j) {
  if (j.at("type") != "minkowski") throw DomainError("expected a minkowski polynomial");
  return MinkowskiPolynomial(instance_from_json(j), parse_array(j.at("log_coefficients")));
}

Json to_json(const RenormalizedPolynomial& poly) {
  Json j;
  j["type"] = "renormalized";
  j.update(to_json(poly.provenance()));
  j["coefficients"] = number_array(poly.coefficients());
  j["log_coefficients"] = number_array(poly.log_coefficients());
  j["mu"] = number_array(poly.mu_values());
  j["log_mu"] = number_array(poly.log_mu());
  return j;
}

RenormalizedPolynomial renormalized_from_json(const Json& j) {
  if (j.at("type") != "renormalized") throw DomainError("expected a renormalized polynomial");
  return RenormalizedPolynomial(instance_from_json(j), parse_array(j.at("log_coefficients")),
                                parse_array(j.at("log_mu")));
}

Json to_json(const RootSet& rs) {
  Json j;
  Json roots = Json::array();
  for (const auto& r : rs.roots) {
    roots.push_back(Json::array({format_number(r.real()), format_number(r.imag())}));
  }
  j["roots"] = roots;
  j["residuals"] = number_array(rs.residuals);
  j["scales"] = number_array(rs.scales);
  j["certificate_residuals"] = number_array(rs.certificate_residuals);
  j["error_bounds"] = number_array(rs.error_bounds);
  j["data_error_bounds"] = number_array(rs.data_error_bounds);
  j["multiplicities"] = rs.multiplicities;
  j["precision_used"] = rs.precision_used;
  return j;
}

Json to_json(const ZeroLocationReport& r) {
  Json j;
  j["all_negative_real"] = r.all_negative_real;
  j["all_left_half_plane"] = r.all_left_half_plane;
  j["max_real_part"] = format_number(r.max_real_part);
  j["max_abs_imag_among_roots"] = format_number(r.max_abs_imag_among_roots);
  j["clusters"] = r.clusters;
  j["resolved_nonreal"] = r.resolved_nonreal;
  return j;
}

Json to_json(const ConvergenceProfile& p) {
  Json j;
  j["kind"] = std::string(to_string(p.kind));
  j["limit"] = limit_for(p.kind) == LimitFunction::E1 ? "E1" : "E2";
  j["radius"] = format_number(p.radius);
  j["samples"] = p.samples;
  Json rows = Json::array();
  for (std::size_t i = 0; i < p.dims.size(); ++i) {
    Json row;
    row["n"] = p.dims[i];
    row["d_n"] = format_number(p.distances[i]);
    rows.push_back(row);
  }
  j["profile"] = rows;
  return j;
}

Json to_json(const ValidationTable& t) {
  Json j = to_json(t.body);
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["t"] = format_number(r.t);
    row["poly"] = format_number(r.polynomial);
    row["mc"] = format_number(r.mc);
    row["stderr"] = format_number(r.std_error);
    row["z"] = format_number(r.z);
    row["flagged"] = r.flagged;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["all_within_limit"] = t.all_within_limit();
  return j;
}

CoefficientTable coefficient_table(const FamilyInstance& body, const QuadratureConfig& cfg) {
  MinkowskiPolynomial poly = minkowski_polynomial(body, cfg);
  QuermassVector q = intrinsic_volumes(body, cfg);
  RenormalizedPolynomial r = renormalize_log(poly, log_shape_factor(body), poly.log_m(0));
  return {body, std::move(poly), std::move(q), std::move(r)};
}

Json to_json(const CoefficientTable& t) {
  Json j = to_json(t.body);
  j["shape_factor"] = format_number(shape_factor(t.body));
  j["volume"] = format_number(t.minkowski.m(0));
  std::vector<double> w, v;
  for (int l = 0; l <= t.body.n; ++l) {
    w.push_back(t.quermass.W(l));
    v.push_back(t.quermass.V(l));
  }
  j["m"] = number_array(t.minkowski.coefficients());
  j["W"] = number_array(w);
  j["V"] = number_array(v);
  j["c"] = number_array(t.renormalized.coefficients());
  j["mu"] = number_array(t.renormalized.mu_values());
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string to_csv(const CoefficientTable& t) {
  std::ostringstream os;
  os << "l,m,W,V,c,mu\r\n";
  for (int l = 0; l <= t.body.n; ++l) {
    os << l << ',' << csv_field(format_number(t.minkowski.m(l))) << ','
       << csv_field(format_number(t.quermass.W(l))) << ','
       << csv_field(format_number(t.quermass.V(l))) << ','
       << csv_field(format_number(t.renormalized.c(l))) << ','
       << csv_field(format_number(t.renormalized.mu(l))) << "\r\n";
  }
  return os.str();
}

std::string to_csv(const ConvergenceProfile& p) {
  std::ostringstream os;
  os << "n,d_n\r\n";
  for (std::size_t i = 0; i < p.dims.size(); ++i) {
    os << p.dims[i] << ',' << csv_field(format_number(p.distances[i])) << "\r\n";
  }
  return os.str();
}

std::string to_csv(const ValidationTable& t) {
  std::ostringstream os;
  os << "t,poly,mc,stderr,z\r\n";
  for (const auto& r : t.rows) {
    os << csv_field(format_number(r.t)) << ',' << csv_field(format_number(r.polynomial)) << ','
       << csv_field(format_number(r.mc)) << ',' << csv_field(format_number(r.std_error)) << ','
       << csv_field(format_number(r.z)) << "\r\n";
  }
  return os.str();
}

}  // namespace steiner
