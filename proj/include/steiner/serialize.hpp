#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "steiner/families.hpp"
#include "steiner/limits.hpp"
#include "steiner/mc_oracle.hpp"
#include "steiner/polynomials.hpp"
#include "steiner/zeros.hpp"

namespace steiner {

using Json = nlohmann::ordered_json;

// Decimal string with 17 significant digits ("%.17g"); "inf", "-inf", "nan"
// for non-finite values. parse_number inverts it exactly.
std::string format_number(double x);
double parse_number(const std::string& s);

Json to_json(const FamilyInstance& body);

// {"type":"minkowski","kind","n","rho","coefficients","log_coefficients"}
Json to_json(const MinkowskiPolynomial& poly);
MinkowskiPolynomial minkowski_from_json(const Json& j);

// {"type":"renormalized","kind","n","rho","coefficients","log_coefficients","mu","log_mu"}
Json to_json(const RenormalizedPolynomial& poly);
RenormalizedPolynomial renormalized_from_json(const Json& j);

Json to_json(const RootSet& roots);
Json to_json(const ZeroLocationReport& report);
Json to_json(const ConvergenceProfile& profile);
Json to_json(const ValidationTable& table);

// One row per l with m_l, W_l, V_l (the intrinsic volume V_l), c_l, μ_l.
struct CoefficientTable {
  FamilyInstance body;
  MinkowskiPolynomial minkowski;
  QuermassVector quermass;
  RenormalizedPolynomial renormalized;
};

CoefficientTable coefficient_table(const FamilyInstance& body, const QuadratureConfig& cfg = {});
Json to_json(const CoefficientTable& table);

// RFC 4180 field quoting.
std::string csv_field(const std::string& s);
std::string to_csv(const CoefficientTable& table);
std::string to_csv(const ConvergenceProfile& profile);
std::string to_csv(const ValidationTable& table);

}  // namespace steiner
