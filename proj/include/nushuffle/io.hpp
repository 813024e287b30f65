#pragma once

#include <string>

#include <json.hpp>

#include "nushuffle/operators.hpp"
#include "nushuffle/spectrum.hpp"
#include "nushuffle/verification.hpp"

namespace nushuffle {

/// Rational p/q in lowest terms, e.g. "1/9"; integers print bare.
std::string rational_string(const mpq_class& q);

// Spectrum record:
//   {"n":..,"k":..,"content":"2,2"|null,
//    "eigenvalues":[{"value":..,"multiplicity":..,"normalized":"p/q"},..]}
// sorted by descending value.
nlohmann::ordered_json spectrum_to_json(const EigenvalueTable& table);
EigenvalueTable spectrum_from_json(const nlohmann::json& j);
std::string spectrum_to_table(const EigenvalueTable& table, bool normalized);
std::string spectrum_to_csv(const EigenvalueTable& table, bool normalized);

nlohmann::ordered_json matrix_to_json(const OperatorMatrix& m, bool normalized);
std::string matrix_to_csv(const OperatorMatrix& m, bool normalized);
std::string matrix_to_table(const OperatorMatrix& m, bool normalized);

nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_to_table(const VerificationReport& report);

/// One row per standard tableau of size n: shape, type, desarrangement
/// flag, slide-chain cells, and v_k for 0 <= k <= n.
nlohmann::ordered_json tableaux_to_json(int n);
std::string tableaux_to_table(int n);
std::string tableaux_to_csv(int n);

}  // namespace nushuffle
