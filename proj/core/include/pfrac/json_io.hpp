#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "pfrac/alphafrac.hpp"
#include "pfrac/jacobi.hpp"
#include "pfrac/symmetry.hpp"

// Canonical JSON encodings. Rationals are strings "p/q" (or "p") in lowest
// terms; polynomials are coefficient arrays in ascending degree. nlohmann's
// default object type keeps keys sorted, so dump() output is byte-stable.
namespace pfrac::json_io {

using nlohmann::json;

// Malformed payload (wrong JSON type, missing key, unparsable number). Kept
// apart from pfrac::Error so callers can tell bad input from domain failures.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Rational& r);
json to_json(const Polynomial& p);
json to_json(const AlphaSequence& a);
json to_json(const Expansion& e);
json to_json(const AlphaTriple& t);
json to_json(const VerificationReport& report);
json to_json(const JacobiTriple& j);
json to_json(const Divisor& d, const Polynomial& R);
json to_json(const GroupWord& w);
json to_json(const OrbitResult& orbit);

Rational rational_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);
AlphaSequence alpha_from_json(const json& j);
Expansion expansion_from_json(const json& j);
AlphaTriple triple_from_json(const json& j);
JacobiTriple jacobi_from_json(const json& j);
Divisor divisor_from_json(const json& j);
GroupWord word_from_json(const json& j);

// Looks up key in an object, throwing SchemaError when absent.
const json& field(const json& obj, const char* key);

// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

}  // namespace pfrac::json_io
