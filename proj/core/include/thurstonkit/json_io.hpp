#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "thurstonkit/branched.hpp"
#include "thurstonkit/polytope.hpp"
#include "thurstonkit/rational.hpp"
#include "thurstonkit/seminorm.hpp"

// JSON encodings shared by the CLI and the reports.
//
//   rational   [num, den], lowest terms, den > 0. Integers too large for 64
//              bits are written as decimal strings.
//   vector     [rational, ...]
//   polytope   {"dim", "vertices", "rays", "lineality", "facets": [{"normal", "rhs"}],
//               "equations": [...]}
//   seminorm   {"space": "H2:<tag>", "duals": [vector, ...]}
//   branched   {"ambient", "rank"?, "sectors": [{"name", "chi", "double_corners",
//               "chi_m", "dual_class", "count"}]}
//
// Readers accept a rational as [num, den], a bare integer, or a "n/d" string.
// Every reader throws MalformedInput naming the offending field.
namespace thurstonkit {

nlohmann::json to_json(const Rat& r);
nlohmann::json to_json(const RatVec& v);
nlohmann::json to_json(const std::vector<RatVec>& vs);
nlohmann::json to_json(const HalfSpace& h);
nlohmann::json polytope_json(const VRep& v, const HRep& facets);
nlohmann::json to_json(const PolyhedralSeminorm& x);
nlohmann::json to_json(const BranchedSurfaceSpec& spec);

Rat rat_from_json(const nlohmann::json& j, const std::string& field);
RatVec vec_from_json(const nlohmann::json& j, const std::string& field);
PolyhedralSeminorm seminorm_from_json(const nlohmann::json& j);
BranchedSurfaceSpec branched_from_json(const nlohmann::json& j);

// Reads and parses a JSON file; MalformedInput on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

// "[3, -1, -3]" for integral vectors; rationals print as "n/d".
std::string bracket_str(const RatVec& v);

}  // namespace thurstonkit
