#include "pfrac/json_io.hpp"

#include <utility>

#include "pfrac/error.hpp"

namespace pfrac::json_io {
namespace {

std::vector<Rational> rationals_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(rational_from_json(item));
  return out;
}

json rationals_to_json(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw SchemaError(std::string("expected an object with key '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Polynomial& p) { return rationals_to_json(p.coeffs()); }

json to_json(const AlphaSequence& a) { return rationals_to_json(a.values()); }

json to_json(const Expansion& e) {
  return {{"b0", to_json(e.b0())}, {"block", rationals_to_json(e.block())}, {"alpha", to_json(e.alpha())}};
}

json to_json(const AlphaTriple& t) {
  return {{"A", to_json(t.A)}, {"B", to_json(t.B)}, {"C", to_json(t.C)}};
}

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return {{"pass", report.pass}, {"checks", std::move(checks)}};
}

json to_json(const JacobiTriple& j) {
  return {{"U", to_json(j.U())}, {"V", to_json(j.V())}, {"W", to_json(j.W())}, {"R", to_json(j.R())}};
}

json to_json(const Divisor& d, const Polynomial& R) {
  json points = json::array();
  for (const auto& p : d.points) points.push_back({{"lambda", to_json(p.lambda)}, {"mu", to_json(p.mu)}});
  return {{"points", std::move(points)}, {"R", to_json(R)}};
}

json to_json(const GroupWord& w) {
  json out = json::array();
  for (const auto& g : w) out.push_back(g.to_string());
  return out;
}

json to_json(const OrbitResult& orbit) {
  json expansions = json::array();
  for (const auto& e : orbit.expansions) expansions.push_back(to_json(e));
  json skipped = json::array();
  for (const auto& edge : orbit.skipped_edges) {
    skipped.push_back(
        {{"from", to_json(edge.from)}, {"generator", edge.generator.to_string()}, {"reason", edge.reason}});
  }
  return {{"expansions", std::move(expansions)},
          {"complete", orbit.complete()},
          {"skipped_edges", std::move(skipped)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError("rational must be a string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& err) {
    throw SchemaError(err.detail());
  }
}

Polynomial polynomial_from_json(const json& j) { return Polynomial(rationals_from_json(j, "polynomial")); }

AlphaSequence alpha_from_json(const json& j) { return AlphaSequence(rationals_from_json(j, "alpha")); }

Expansion expansion_from_json(const json& j) {
  return Expansion(rational_from_json(field(j, "b0")), rationals_from_json(field(j, "block"), "block"),
                   alpha_from_json(field(j, "alpha")));
}

AlphaTriple triple_from_json(const json& j) {
  return {polynomial_from_json(field(j, "A")), polynomial_from_json(field(j, "B")),
          polynomial_from_json(field(j, "C"))};
}

JacobiTriple jacobi_from_json(const json& j) {
  return JacobiTriple(polynomial_from_json(field(j, "U")), polynomial_from_json(field(j, "V")),
                      polynomial_from_json(field(j, "W")), polynomial_from_json(field(j, "R")));
}

Divisor divisor_from_json(const json& j) {
  const json& points = field(j, "points");
  if (!points.is_array()) throw SchemaError("points must be an array");
  Divisor d;
  for (const auto& p : points) {
    d.points.push_back({rational_from_json(field(p, "lambda")), rational_from_json(field(p, "mu"))});
  }
  return d;
}

GroupWord word_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("group word must be an array of strings");
  GroupWord out;
  for (const auto& item : j) {
    if (!item.is_string()) throw SchemaError("group word letters must be strings");
    try {
      out.push_back(Generator::parse(item.get<std::string>()));
    } catch (const Error& err) {
      throw SchemaError(err.detail());
    }
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pfrac::json_io
