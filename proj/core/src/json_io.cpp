#include "thurstonkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "thurstonkit/errors.hpp"

namespace thurstonkit {
namespace {

using nlohmann::json;

json int_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class int_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    try {
      const Rat r = Rat::parse(j.get<std::string>());
      if (r.is_integer()) return r.numerator();
    } catch (const MalformedInput&) {
    }
  }
  throw MalformedInput(field + ": expected an integer");
}

std::int64_t int64_field(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw MalformedInput(where + "." + key + ": expected an integer");
  return v.get<std::int64_t>();
}

}  // namespace

json to_json(const Rat& r) { return json::array({int_json(r.numerator()), int_json(r.denominator())}); }

json to_json(const RatVec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

json to_json(const std::vector<RatVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json to_json(const HalfSpace& h) { return json{{"normal", to_json(h.normal)}, {"rhs", to_json(h.rhs)}}; }

json polytope_json(const VRep& v, const HRep& facets) {
  json out;
  out["dim"] = v.dim;
  out["vertices"] = to_json(v.vertices);
  out["rays"] = to_json(v.rays);
  out["lineality"] = to_json(v.lineality);
  out["facets"] = json::array();
  for (const auto& h : facets.halfspaces) out["facets"].push_back(to_json(h));
  out["equations"] = json::array();
  for (const auto& h : facets.equations) out["equations"].push_back(to_json(h));
  return out;
}

json to_json(const PolyhedralSeminorm& x) {
  return json{{"space", "H2:" + x.space()}, {"duals", to_json(x.reduced_duals())}};
}

json to_json(const BranchedSurfaceSpec& spec) {
  json out;
  out["ambient"] = spec.ambient;
  if (spec.rank != 0) out["rank"] = spec.rank;
  out["sectors"] = json::array();
  for (const auto& s : spec.sectors) {
    json row;
    row["name"] = s.name;
    if (s.chi) row["chi"] = *s.chi;
    if (s.double_corners) row["double_corners"] = *s.double_corners;
    if (s.chi_m) row["chi_m"] = to_json(*s.chi_m);
    json dc = json::array();
    for (const auto& c : s.dual_class.coords) {
      dc.push_back(c.is_integer() ? int_json(c.numerator()) : to_json(c));
    }
    row["dual_class"] = std::move(dc);
    row["count"] = s.count;
    out["sectors"].push_back(std::move(row));
  }
  return out;
}

Rat rat_from_json(const json& j, const std::string& field) {
  if (j.is_array()) {
    if (j.size() != 2) throw MalformedInput(field + ": rational must be [num, den]");
    const mpz_class den = int_from_json(j[1], field + "[1]");
    if (den <= 0) throw MalformedInput(field + ": denominator must be positive");
    return Rat(int_from_json(j[0], field + "[0]"), den);
  }
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const MalformedInput&) {
      throw MalformedInput(field + ": not a rational: '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned()) return Rat(int_from_json(j, field), mpz_class(1));
  throw MalformedInput(field + ": expected a rational");
}

RatVec vec_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw MalformedInput(field + ": expected an array");
  RatVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rat_from_json(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

PolyhedralSeminorm seminorm_from_json(const json& j) {
  if (!j.is_object()) throw MalformedInput("seminorm: expected an object");
  if (!j.contains("space") || !j["space"].is_string()) throw MalformedInput("space: missing or not a string");
  std::string space = j["space"].get<std::string>();
  if (space.rfind("H2:", 0) != 0) throw MalformedInput("space: must start with 'H2:'");
  space = space.substr(3);
  if (!j.contains("duals") || !j["duals"].is_array() || j["duals"].empty()) {
    throw MalformedInput("duals: missing or empty");
  }
  std::vector<RatVec> duals;
  for (std::size_t i = 0; i < j["duals"].size(); ++i) {
    duals.push_back(vec_from_json(j["duals"][i], "duals[" + std::to_string(i) + "]"));
  }
  const std::size_t rank = duals.front().dim();
  return PolyhedralSeminorm(space, rank, std::move(duals));
}

BranchedSurfaceSpec branched_from_json(const json& j) {
  if (!j.is_object()) throw MalformedInput("branched surface: expected an object");
  BranchedSurfaceSpec spec;
  if (!j.contains("ambient") || !j["ambient"].is_string()) throw MalformedInput("ambient: missing or not a string");
  spec.ambient = j["ambient"].get<std::string>();
  if (j.contains("rank")) {
    if (!j["rank"].is_number_unsigned()) throw MalformedInput("rank: expected a nonnegative integer");
    spec.rank = j["rank"].get<std::size_t>();
  }
  if (!j.contains("sectors") || !j["sectors"].is_array()) throw MalformedInput("sectors: missing or not an array");
  for (std::size_t i = 0; i < j["sectors"].size(); ++i) {
    const auto& row = j["sectors"][i];
    const std::string where = "sectors[" + std::to_string(i) + "]";
    if (!row.is_object()) throw MalformedInput(where + ": expected an object");
    SectorRecord s;
    s.name = row.value("name", where);
    if (row.contains("chi")) s.chi = int64_field(row, "chi", where);
    if (row.contains("double_corners")) s.double_corners = int64_field(row, "double_corners", where);
    if (row.contains("chi_m")) s.chi_m = rat_from_json(row["chi_m"], where + ".chi_m");
    if (!row.contains("dual_class")) throw MalformedInput(where + ".dual_class: missing");
    s.dual_class = H1Class{spec.ambient, vec_from_json(row["dual_class"], where + ".dual_class")};
    s.count = row.contains("count") ? int64_field(row, "count", where) : 1;
    spec.sectors.push_back(std::move(s));
  }
  validate(spec);
  return spec;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string bracket_str(const RatVec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

}  // namespace thurstonkit
