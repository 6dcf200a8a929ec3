#ifndef MOTIVIC_SERIALIZE_HPP
#define MOTIVIC_SERIALIZE_HPP

#include <json.hpp>

#include <string>

#include "motivic/formulas.hpp"
#include "motivic/oracle.hpp"

namespace motivic {

using json = nlohmann::json;

/// {"num": [[exp, "coeff"], ...], "den": [[exp, "coeff"], ...]} with
/// ascending exponents and decimal-string coefficients.
json to_json(const MClass& a);
MClass mclass_from_json(const json& j);

/// {"order": N, "coeffs": [MClass, ...]}.
json to_json(const MSeries& s);
MSeries mseries_from_json(const json& j);

json to_json(const IdentityReport& rep);
json to_json(const PolynomialityReport& rep);
json to_json(const FibrationFailureReport& rep);
json to_json(const CountRecord& rec);
json to_json(const AxiomSuiteResult& res);

std::string csv_header_count();
std::string to_csv_row(const CountRecord& rec);
std::string to_csv(const IdentityReport& rep); // header + rows

/// Aligned-column text tables.
std::string render_table(const IdentityReport& rep);
std::string render_table(const FibrationFailureReport& rep);
std::string render_table(const AxiomSuiteResult& res);

std::string rational_str(const Rational& v);

/// Parse expressions in L over the integers: + - * / ^ ( ), e.g.
/// "L^2 - 1", "(L-1)*(L+1)", "1/(L^2-1)", "L^-1".
MClass parse_mclass(const std::string& text);

} // namespace motivic

#endif
