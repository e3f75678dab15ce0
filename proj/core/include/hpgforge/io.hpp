#pragma once

#include <json.hpp>

#include "hpgforge/transformation.hpp"

namespace hpgforge {

using Json = nlohmann::ordered_json;

// Polynomials as arrays of {re: "p/q", im: "p/q"} ascending by degree.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, Ring r);

Json map_to_json(const RationalMap& f);
RationalMap map_from_json(const Json& j, Ring r);

Json theta_to_json(const RadicalFactor& t);
RadicalFactor theta_from_json(const Json& j, Ring r);

// Schema "hpgforge-1": {schema, family, u, degree, phi, theta,
// source_exponents, target_exponents, triple?}.
Json transformation_to_json(const Transformation& t, const Triple* triple = nullptr);

struct ParsedTransformation {
    Transformation transformation;
    std::optional<Triple> triple;
};
ParsedTransformation transformation_from_json(const Json& j);

std::string exponents_to_string(const ExpTriple& e);

// LaTeX for the full 2F1 identity in two-line hypergeometric layout.
std::string transformation_to_latex(const Transformation& t);
std::string poly_to_latex(const Poly& p, const std::string& var = "z");

}  // namespace hpgforge
