#pragma once

// JSON and CSV encodings used by the command-line tool.
//
//   matrix     {"dim": n, "re": [[...]], "im": [[...]]}
//   state      {"bloch": [x, y, z]}  or  {"rho": <matrix>}
//   direction  {"m": [x, y, z]}        (normalized on load)
//   two-qubit  {"amps_re": [4], "amps_im": [4]}  or  {"schmidt_alpha": a}
//   scheme     {"observables": [...], "recipe": ..., "entries": [{"a": [...], "p": ...}],
//               "negativity": ..., "classical": ...}
//
// Malformed input raises Error with code parse-error; well-formed input that
// is physically invalid raises the corresponding domain error.

#include <string>

#include <nlohmann/json.hpp>

#include "pseudoprob/entanglement.hpp"
#include "pseudoprob/scan.hpp"
#include "pseudoprob/scheme.hpp"

namespace pseudoprob {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

DensityMatrix state_from_json(const nlohmann::json& j);
Direction direction_from_json(const nlohmann::json& j);
Json direction_to_json(const Direction& d);

Json recipe_to_json(const OrderingRecipe& r);
OrderingRecipe recipe_from_json(const nlohmann::json& j);

/// Amplitudes must be normalized to within `tolerance`.
TwoQubitPureState two_qubit_state_from_json(const nlohmann::json& j, double tolerance = 1e-8);

Json scheme_to_json(const Scheme& s, double eps = kClassicalEps);
/// Header a1,...,aN,p then one row per entry in canonical order.
std::string scheme_to_csv(const Scheme& s);

Json scan_to_json(const ScanResult& r);
/// Summary and warnings as "# key=value" comment lines, then header and rows.
std::string scan_to_csv(const ScanResult& r);

/// Shortest round-trip decimal ("%.17g").
std::string format_double(double v);

/// Parses JSON text; throws parse-error with the parser's message.
nlohmann::json parse_json(const std::string& text);

}  // namespace pseudoprob
