#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "isogr/charts.hpp"
#include "isogr/clifford.hpp"
#include "isogr/cone.hpp"
#include "isogr/verify.hpp"

namespace isogr {

// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

// --------------------------- serialization --------------------------------

Json mat_json(const Mat& m);                 // rows of "p/q" strings
Json ivec_json(const IVec& v);               // row of integers
Json rays_json(const std::vector<IVec>& rays);
std::string plucker_key(const std::vector<int>& idx);  // "1,2,5"
std::string subset_key(std::uint32_t mask);            // "" for the empty set
Json plucker_json(const PluckerVector& v);
Json spinor_json(const ExtElement& e);       // keys in subset-lex order
Json suites_json(Family family, int n, std::uint64_t seed, int trials,
                 const std::vector<SuiteResult>& suites);

// Everything `report` prints for one (family, n): basis, canonical class
// both ways, section classes, Mori generators with pairings, claimed and
// computed nef rays, effective generators, the Fano verdict, and the
// blow-up step counts.
Json report_json(Family family, int n);

// ------------------------------ parsing -----------------------------------

Family parse_family(const Json& payload);    // field "family": "lg" | "og"
Rat parse_rat_field(const Json& j, const std::string& field);
Mat parse_matrix(const Json& j, const std::string& field);

// ------------------------- eval subcommands -------------------------------

// chart: {"family","n","l","tau"?,"coords"} -> layout/standard matrices.
Json eval_chart(const Json& payload);
// plucker: chart payload, or {"family","n","matrix"} -> maximal minors.
Json eval_plucker(const Json& payload);
// spinor: orthogonal chart payload or matrix, plus "l" -> coefficients.
Json eval_spinor(const Json& payload);
// lm: {"family","n","x00","X"} -> image point, projection, inverse.
Json eval_lm(const Json& payload);

// ------------------------------- text -------------------------------------

// Flattens a JSON document to "path<TAB>value" lines (arrays indexed).
std::string to_tsv(const Json& j);

}  // namespace isogr
