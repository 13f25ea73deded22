#pragma once

#include <string>

#include <json.hpp>

#include "zclosure/closures.hpp"
#include "zclosure/cube.hpp"
#include "zclosure/polynomials.hpp"
#include "zclosure/witnesses.hpp"

namespace zclosure {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "zclosure/1";

/// Sorted weights as a JSON array.
Json to_json(const SymmetricSet& e);
SymmetricSet set_from_json(int n, const Json& j);

/// {"kind":"symmetric","p":..,"n":..,"sigma":[c_0..c_n]}
Json to_json(const SymmetricPoly& f);
/// {"kind":"multilinear","p":..,"n":..,"terms":{"01100":c,...}}, monomials
/// written as x_1 ... x_n bitstrings, in increasing mask order.
Json to_json(const MultilinearPoly& f);
Json to_json(const WitnessPolynomial& f);
WitnessPolynomial polynomial_from_json(const Json& j);

Json to_json(const VanishingSpec& spec, int n);
Json to_json(const WitnessReport& w);
Json to_json(const ProductWitness& w);

/// Query and result of a closure computation.
Json closure_json(const ClosureQuery& q, const ClosureResult& r);

/// Envelope {"schema":"zclosure/1","command":command, ...body}.
Json envelope(const std::string& command, const Json& body);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace zclosure
