#pragma once
// JSON round trips for permutations, automorphisms and certificates. Parsed
// values go through the same validation as the programmatic constructors, so
// a successfully loaded object carries the same guarantees.

#include <string>
#include <variant>

#include "jinf/automorphism.hpp"
#include "jinf/errors.hpp"
#include "jinf/permutation.hpp"

namespace jinf {

struct FormatError : Error {
  explicit FormatError(const std::string& detail) : Error("format error: " + detail) {}
};

// {"modulus": p, "threshold": N, "classes": [{"from", "to", "offset"}, ...],
//  "patch": {"n": m, ...}}
std::string permutationToJson(const ComputablePermutation& s);
ComputablePermutation permutationFromJson(const std::string& text);

using AutomorphismValue = std::variant<RegularAutomorphism, PiecewiseAutomorphism>;

// {"kind": "regular", "flip": bool, "perm": {...}} or
// {"kind": "piecewise", "pieces": [{"rep": "<set expr>", "perm": {...}}, ...]}
std::string automorphismToJson(const AutomorphismValue& f);
AutomorphismValue automorphismFromJson(const std::string& text);

AutomorphismOracle oracleFromValue(const AutomorphismValue& f);

// {"a": "<set expr>", "y": ..., "fa": ..., "fy": ...}
std::string certificateToJson(const NonRegularityCertificate& cert);
NonRegularityCertificate certificateFromJson(const std::string& text);

}  // namespace jinf
