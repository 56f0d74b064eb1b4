#pragma once

// JSON encodings shared by the library and the `hodge` tool.
//
//   Rational          "a/b" or "a"
//   GaussianRational  {"re": "<rational>", "im": "<rational>"}
//   matrix            array of row arrays
//   subspace          array of basis vectors (canonical basis, one row each)
//   structure         {"kind": "decomposition" | "filtration" | "representation",
//                      "weight": n | "mixed", "rank": r,
//                      "blocks" | "steps" | "coefficients": {"p,q" | "p": ...}}
//
// Parsers throw SchemaError carrying a JSON pointer to the offending value.

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "hodgekit/elliptic_periods.hpp"
#include "hodgekit/exact_linalg.hpp"
#include "hodgekit/hodge_structure.hpp"
#include "hodgekit/nc_hodge.hpp"
#include "hodgekit/polarization.hpp"

namespace hodgekit {

using json = nlohmann::json;

using AnyStructure = std::variant<HodgeDecomposition, HodgeFiltration, HodgeRepresentation>;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& pointer = "");
json scalar_to_json(const GaussianRational& x);
/// Also accepts a bare rational (string or integer) for a real scalar.
GaussianRational scalar_from_json(const json& j, const std::string& pointer = "");
json matrix_to_json(const QiMatrix& m);
/// `cols` is required for matrices with zero rows.
QiMatrix matrix_from_json(const json& j, std::size_t cols, const std::string& pointer = "");
json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, std::size_t ambient_dim, const std::string& pointer = "");

json to_json(const HodgeDecomposition& d);
json to_json(const HodgeFiltration& f);
json to_json(const HodgeRepresentation& r);
json to_json(const AnyStructure& s);
AnyStructure structure_from_json(const json& j);
/// {"kind": "general", "rank": r, "components": {"k": decomposition}}; each
/// component is written in the canonical basis of its weight space.
json to_json(const GeneralHodgeStructure& g);

json to_json(const ValidationReport& report);

json to_json(const PolarizationForm& q);
PolarizationForm form_from_json(const json& j);
json to_json(const OrthogonalityCheck& c);
json to_json(const PositivityCheck& c);
json to_json(const HodgeRiemannReport& report);

json to_json(const SL2Rep& rep);
SL2Rep sl2_rep_from_json(const json& j);
json to_json(const CharacterMultiset& c);
json to_json(const NcHodgeReport& report);

json complex_to_json(Complex z);
json to_json(const SL2Z& m);
json to_json(const TauPoint& t);
json to_json(const EllipticRecord& r);

}  // namespace hodgekit
