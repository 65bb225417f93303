#include "thurstonkit/pretzel.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "thurstonkit/json_io.hpp"
#include "thurstonkit/linalg.hpp"

namespace thurstonkit {
namespace {

using nlohmann::json;

RatVec vec3(const Rat& x, const Rat& y, const Rat& z) { return RatVec{x, y, z}; }

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// |a - ab - ac - bc|: how often the surface Q meets l_3.
std::int64_t q_punctures(const PretzelParams& p) {
  const auto [a, b, c] = p;
  return abs64(a - a * b - a * c - b * c);
}

std::set<RatVec> as_set(const std::vector<RatVec>& vs) { return {vs.begin(), vs.end()}; }

}  // namespace

void validate(const PretzelParams& p) {
  if (p.a == 0 || p.b <= 0 || p.c <= 0) {
    throw ContractViolation("pretzel parameters need a != 0 and b, c > 0 (mirror and relabel first); got (" +
                            std::to_string(p.a) + ", " + std::to_string(p.b) + ", " + std::to_string(p.c) + ")");
  }
}

std::string space_tag(const PretzelParams& p) {
  return "P(" + std::to_string(2 * p.a) + "," + std::to_string(2 * p.b) + "," + std::to_string(2 * p.c) + ")";
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kAlternating: return "ALTERNATING";
    case CaseTag::kAMinusOne: return "A_MINUS_ONE";
    case CaseTag::kGoodNegative: return "GOOD_NEGATIVE";
    case CaseTag::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

CaseTag classify(const PretzelParams& p) {
  validate(p);
  const auto [a, b, c] = p;
  if (a > 0) return CaseTag::kAlternating;
  if (a == -1) return CaseTag::kAMinusOne;
  return (a * b + b * c + a * c <= a) ? CaseTag::kGoodNegative : CaseTag::kUnknown;
}

std::string_view to_string(Hierarchy h) {
  switch (h) {
    case Hierarchy::kMinusMinus: return "--";
    case Hierarchy::kMinusPlus: return "-+";
    case Hierarchy::kPlusMinus: return "+-";
    case Hierarchy::kPlusPlus: return "++";
  }
  return "--";
}

H1Class euler_class_formula(const PretzelParams& p, Hierarchy h) {
  validate(p);
  const std::int64_t a = abs64(p.a);
  const std::int64_t b = p.b;
  const std::int64_t c = p.c;
  const std::string space = space_tag(p);
  switch (h) {
    case Hierarchy::kMinusMinus: return H1Class{space, vec3(b + c - 1, a - c - 1, 1 - a - b)};
    case Hierarchy::kMinusPlus: return H1Class{space, vec3(b + c - 1, 1 - a - c, a - b - 1)};
    default: break;
  }
  if (p.a > -2) {
    throw CaseUnsupported("the (" + std::string(to_string(h)) + ") hierarchy needs a <= -2; got a = " +
                          std::to_string(p.a));
  }
  if (h == Hierarchy::kPlusMinus) return H1Class{space, vec3(1 - b - c, a + c - 3, 1 + b - a)};
  return H1Class{space, vec3(1 - b - c, 1 + c - a, a + b - 3)};
}

std::vector<std::pair<Hierarchy, H1Class>> EulerClasses::available() const {
  std::vector<std::pair<Hierarchy, H1Class>> out{{Hierarchy::kMinusMinus, minus_minus},
                                                 {Hierarchy::kMinusPlus, minus_plus}};
  if (plus_minus) out.emplace_back(Hierarchy::kPlusMinus, *plus_minus);
  if (plus_plus) out.emplace_back(Hierarchy::kPlusPlus, *plus_plus);
  return out;
}

BranchedSurfaceSpec sector_table(const PretzelParams& p) {
  validate(p);
  const std::int64_t a = abs64(p.a);
  const std::int64_t b = p.b;
  const std::int64_t c = p.c;
  BranchedSurfaceSpec spec;
  spec.ambient = space_tag(p);
  spec.rank = 3;
  auto meridian = [&](std::size_t i) { return H1Class{spec.ambient, RatVec::unit(3, i)}; };
  auto add = [&](std::string name, std::int64_t count, std::int64_t dc, H1Class dual) {
    if (count <= 0) return;
    SectorRecord s;
    s.name = std::move(name);
    s.chi = 1;
    s.double_corners = dc;
    s.dual_class = std::move(dual);
    s.count = count;
    spec.sectors.push_back(std::move(s));
  };
  const H1Class m1 = meridian(0);
  const H1Class m2 = meridian(1);
  const H1Class m3 = meridian(2);
  // Every sector is a disk; chi_m = 1 - dc/2.
  add("o1", 1, 4, m2);
  add("o2", 1, 6, m3);
  add("a+", a - 1, 0, m2);
  add("a-", a - 1, 4, m3);
  add("b+", b, 0, m1);
  add("b-", b - 1, 4, m3);
  add("c+", c, 0, m1);
  add("c-", c - 1, 4, m2);
  add("d1", 1, 0, H1Class{spec.ambient, m2.coords - m1.coords});
  add("D2", 1, 0, H1Class{spec.ambient, m3.coords - m2.coords});
  return spec;
}

DiskSwapRecord d2_swap_record(const PretzelParams& p, Hierarchy from) {
  validate(p);
  const std::int64_t a = abs64(p.a);
  const H1Class arc{space_tag(p), vec3(0, -1, 1)};
  if (from == Hierarchy::kMinusMinus) return DiskSwapRecord{"D2", 2 * a, arc};
  if (from == Hierarchy::kPlusMinus) {
    if (p.a > -2) throw CaseUnsupported("the (+-) hierarchy needs a <= -2");
    return DiskSwapRecord{"D2", 2 * a - 2, arc};
  }
  throw ContractViolation("D_2 is reversed starting from the (--) or (+-) hierarchy only");
}

EulerClasses euler_classes(const PretzelParams& p) {
  validate(p);
  EulerClasses out{euler_class_formula(p, Hierarchy::kMinusMinus), euler_class_formula(p, Hierarchy::kMinusPlus),
                   std::nullopt, std::nullopt};

  const RatVec pants{1, 1, 1};
  if (dot(out.minus_minus.coords, pants) != Rat(-1)) {
    throw VerificationFailure("<Gamma_--, l1+l2+l3> != -1 for " + space_tag(p));
  }
  const H1Class from_sectors = gamma_class(sector_table(p));
  if (from_sectors != out.minus_minus) {
    throw VerificationFailure("sector table total " + from_sectors.coords.str() + " != closed form " +
                              out.minus_minus.coords.str());
  }
  const H1Class swapped = swap_disk_orientation(out.minus_minus, d2_swap_record(p, Hierarchy::kMinusMinus));
  if (swapped != out.minus_plus) {
    throw VerificationFailure("D_2 reversal gives " + swapped.coords.str() + " != closed form " +
                              out.minus_plus.coords.str());
  }
  if (p.a <= -2) {
    out.plus_minus = euler_class_formula(p, Hierarchy::kPlusMinus);
    out.plus_plus = euler_class_formula(p, Hierarchy::kPlusPlus);
    const H1Class swapped_plus = swap_disk_orientation(*out.plus_minus, d2_swap_record(p, Hierarchy::kPlusMinus));
    if (swapped_plus != *out.plus_plus) {
      throw VerificationFailure("D_2 reversal gives " + swapped_plus.coords.str() + " != closed form " +
                                out.plus_plus->coords.str());
    }
  }
  return out;
}

HRep euler_slab_system(const PretzelParams& p) {
  HRep h;
  h.dim = 3;
  std::set<RatVec> seen;
  for (const auto& [hier, e] : euler_classes(p).available()) {
    if (!seen.insert(e.coords).second) continue;
    h.halfspaces.push_back(HalfSpace{e.coords, Rat(1)});
    h.halfspaces.push_back(HalfSpace{-e.coords, Rat(1)});
  }
  return h;
}

VRep thurston_ball(const PretzelParams& p) {
  const CaseTag tag = classify(p);
  const std::int64_t a = abs64(p.a);
  const std::int64_t b = p.b;
  const std::int64_t c = p.c;
  VRep v;
  v.dim = 3;
  auto pm = [&](const RatVec& x) {
    v.vertices.push_back(x);
    v.vertices.push_back(-x);
  };
  const RatVec pants{1, 1, 1};
  switch (tag) {
    case CaseTag::kAlternating:
      pm(vec3(Rat(1, b + c - 1), 0, 0));
      pm(vec3(0, Rat(1, a + c - 1), 0));
      pm(vec3(0, 0, Rat(1, a + b - 1)));
      pm(pants);
      break;
    case CaseTag::kAMinusOne:
      if (b == 1) {
        v.lineality.push_back(vec3(1, 1, 0));
      } else {
        pm(vec3(Rat(1, b - 1), Rat(1, b - 1), 0));
      }
      if (c == 1) {
        v.lineality.push_back(vec3(1, 0, 1));
      } else {
        pm(vec3(Rat(1, c - 1), 0, Rat(1, c - 1)));
      }
      pm(pants);
      break;
    case CaseTag::kGoodNegative: {
      const Rat scale = Rat(1, (a - 1) * (b + c - 1));
      pm(vec3(Rat(1, b + c - 1), 0, 0));
      pm(vec3(c, b + c - 1, 0) * scale);
      pm(vec3(b, 0, b + c - 1) * scale);
      pm(pants);
      break;
    }
    case CaseTag::kUnknown:
      throw UnknownRegion("the Thurston ball of " + space_tag(p) +
                              " is not determined (a <= -2 and ab + bc + ac > a); only an outer bound is known",
                          euler_slab_system(p));
  }
  return canonical(std::move(v));
}

PolyhedralSeminorm seminorm_of(const PretzelParams& p) {
  const VRep dual = dual_polytope(thurston_ball(p));
  return PolyhedralSeminorm(space_tag(p), 3, dual.vertices);
}

std::vector<SurfaceWitness> surface_catalog(const PretzelParams& p) {
  validate(p);
  const std::int64_t a = abs64(p.a);
  const std::int64_t b = p.b;
  const std::int64_t c = p.c;
  const std::string space = space_tag(p);
  auto cls = [&](const RatVec& v) { return H2Class{space, v}; };

  std::vector<SurfaceWitness> out;
  out.push_back({"S", cls(vec3(1, 1, 1)), -1, std::nullopt});
  out.push_back({"S1", cls(vec3(1, 0, 0)), 1 - b - c, std::nullopt});
  out.push_back({"-S1", cls(vec3(-1, 0, 0)), 1 - b - c, std::nullopt});
  out.push_back({"S2", cls(vec3(0, 1, 0)), 1 - a - c, std::nullopt});
  out.push_back({"S3", cls(vec3(0, 0, 1)), 1 - a - b, std::nullopt});
  if (p.a <= -2) {
    const std::int64_t k = q_punctures(p);
    const std::int64_t unpunctured = b + c - 1 - b * c;
    out.push_back({"Q", cls(vec3(c, b + c - 1, 0)), unpunctured - k, k});
    out.push_back({"Q'", cls(vec3(b, 0, b + c - 1)), unpunctured - k, k});
  }
  if (p.a < 0) {
    out.push_back({"A", cls(vec3(1, 1, 0)), 2 - a - b, a + b - 2});
    out.push_back({"A'", cls(vec3(1, 0, 1)), 2 - a - c, a + c - 2});
  }
  return out;
}

SurfaceWitness surface_witness(const PretzelParams& p, std::string_view name) {
  for (auto& w : surface_catalog(p)) {
    if (w.name == name) return w;
  }
  throw WitnessUnavailable("no surface witness '" + std::string(name) + "' for " + space_tag(p));
}

std::vector<FaceMarking> face_markings(const PretzelParams& p) {
  if (classify(p) != CaseTag::kGoodNegative) {
    throw CaseUnsupported("face markings are tabulated for the good non-alternating case only");
  }
  const std::int64_t b = p.b;
  const std::int64_t c = p.c;
  const std::string space = space_tag(p);
  const EulerClasses e = euler_classes(p);
  const RatVec pants{1, 1, 1};
  const RatVec l1{1, 0, 0};
  const RatVec q = vec3(c, b + c - 1, 0);
  const RatVec q3 = vec3(b, 0, b + c - 1);

  const std::vector<std::pair<Hierarchy, std::vector<RatVec>>> rows{
      {Hierarchy::kMinusMinus, {pants, -l1, -q, q3}},
      {Hierarchy::kMinusPlus, {pants, -l1, q, -q3}},
      {Hierarchy::kPlusMinus, {pants, l1, q3}},
      {Hierarchy::kPlusPlus, {pants, l1, q}},
  };
  auto euler_of = [&](Hierarchy h) {
    switch (h) {
      case Hierarchy::kMinusMinus: return e.minus_minus;
      case Hierarchy::kMinusPlus: return e.minus_plus;
      case Hierarchy::kPlusMinus: return *e.plus_minus;
      case Hierarchy::kPlusPlus: return *e.plus_plus;
    }
    return e.minus_minus;
  };
  std::vector<FaceMarking> out;
  for (int sign : {1, -1}) {
    for (const auto& [h, classes] : rows) {
      FaceMarking f{h, sign, euler_of(h), {}};
      f.euler_class.coords *= Rat(sign);
      for (const auto& v : classes) f.marked.push_back(H2Class{space, v * Rat(sign)});
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<H2Class> sample_classes(const std::string& space, std::size_t rank, std::size_t n,
                                    std::int64_t bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  std::vector<H2Class> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec v(rank);
    for (std::size_t k = 0; k < rank; ++k) v[k] = Rat(coord(rng));
    out.push_back(H2Class{space, std::move(v)});
  }
  return out;
}

json CaseReport::to_json() const {
  json j;
  j["params"] = {{"a", params.a}, {"b", params.b}, {"c", params.c}};
  j["link"] = space_tag(params);
  j["case"] = std::string(thurstonkit::to_string(tag));
  j["degenerate"] = degenerate;
  j["pass"] = passed();
  j["checks"] = json::array();
  for (const auto& c : checks) j["checks"].push_back(thurstonkit::to_json(c));
  return j;
}

CaseReport verify_case(const PretzelParams& p, const VerifyOptions& options) {
  CaseReport report;
  report.params = p;
  report.tag = classify(p);
  const std::string space = space_tag(p);
  const std::int64_t a = abs64(p.a);
  const std::int64_t b = p.b;
  const std::int64_t c = p.c;
  auto add = [&](std::string name, bool pass, json detail) {
    report.checks.push_back(Check{std::move(name), pass, std::move(detail)});
  };

  const VRep ball = thurston_ball(p);  // throws UnknownRegion before any check runs

  // Closed forms, sector table and disk reversal, each compared explicitly.
  const H1Class mm = euler_class_formula(p, Hierarchy::kMinusMinus);
  const H1Class from_sectors = gamma_class(sector_table(p));
  add("sector_table_total", from_sectors == mm,
      {{"sector_total", to_json(from_sectors.coords)}, {"closed_form", to_json(mm.coords)},
       {"sector_count", total_sector_count(sector_table(p))}});

  const Rat pants_pairing = dot(mm.coords, RatVec{1, 1, 1});
  add("pants_fully_marked", pants_pairing == Rat(-1),
      {{"pairing", thurstonkit::to_json(pants_pairing)}, {"euler_char", -1}});

  {
    const H1Class mp = euler_class_formula(p, Hierarchy::kMinusPlus);
    const H1Class swapped = swap_disk_orientation(mm, d2_swap_record(p, Hierarchy::kMinusMinus));
    bool ok = swapped == mp;
    json detail{{"minus_plus_swap", to_json(swapped.coords)}, {"minus_plus_closed_form", to_json(mp.coords)}};
    if (p.a <= -2) {
      const H1Class pm = euler_class_formula(p, Hierarchy::kPlusMinus);
      const H1Class pp = euler_class_formula(p, Hierarchy::kPlusPlus);
      const H1Class swapped_plus = swap_disk_orientation(pm, d2_swap_record(p, Hierarchy::kPlusMinus));
      ok = ok && swapped_plus == pp;
      detail["plus_plus_swap"] = to_json(swapped_plus.coords);
      detail["plus_plus_closed_form"] = to_json(pp.coords);
    }
    add("swap_derivations", ok, detail);
  }

  const EulerClasses euler = euler_classes(p);
  const PolyhedralSeminorm x = seminorm_of(p);
  const VRep ball_again = unit_ball(x);
  add("ball_duality", ball_again == ball,
      {{"thurston_ball", to_json(ball.vertices)}, {"unit_ball_of_dual", to_json(ball_again.vertices)},
       {"ball_lineality", to_json(ball.lineality)}, {"unit_ball_lineality", to_json(ball_again.lineality)}});

  if (report.tag == CaseTag::kGoodNegative) {
    const VRep slab_ball = h_to_v(euler_slab_system(p));
    add("euler_slab_vertices", slab_ball == ball,
        {{"slab_vertices", to_json(slab_ball.vertices)}, {"formula_vertices", to_json(ball.vertices)}});

    std::set<RatVec> expected;
    for (const auto& [h, e] : euler.available()) {
      expected.insert(e.coords);
      expected.insert(-e.coords);
    }
    const std::set<RatVec> got = as_set(x.reduced_duals());
    add("dual_vertices_are_euler_classes", got == expected,
        {{"dual_vertices", to_json(x.reduced_duals())},
         {"euler_classes", to_json(std::vector<RatVec>(expected.begin(), expected.end()))}});

    bool ok = true;
    json rows = json::array();
    for (const auto& face : face_markings(p)) {
      for (const auto& alpha : face.marked) {
        const Rat pr = pairing(face.euler_class, alpha);
        const Rat norm = eval(x, alpha);
        const bool marked = pr == -norm;
        ok = ok && marked;
        if (!marked) {
          rows.push_back({{"hierarchy", std::string(to_string(face.hierarchy))}, {"sign", face.sign},
                          {"class", to_json(alpha.coords)}, {"pairing", thurstonkit::to_json(pr)},
                          {"norm", thurstonkit::to_json(norm)}});
        }
      }
    }
    add("face_markings", ok, {{"rows", 8}, {"mismatches", rows}});
  }

  if (report.tag == CaseTag::kAlternating) {
    const HRep facets = v_to_h(ball);
    std::set<RatVec> normals;
    for (const auto& h : facets.halfspaces) normals.insert(primitive_integer(h.normal));
    const bool has_mm = normals.count(primitive_integer(euler.minus_minus.coords)) > 0;
    const bool has_mp = normals.count(primitive_integer(euler.minus_plus.coords)) > 0;
    // Each parameter equal to 1 makes two pairs of facets coplanar.
    const std::size_t ones = (a == 1) + (b == 1) + (c == 1);
    const std::size_t expected_facets = 12 - 2 * ones;
    add("alternating_facets", facets.halfspaces.size() == expected_facets && has_mm && has_mp,
        {{"facet_count", facets.halfspaces.size()}, {"expected_facets", expected_facets},
         {"minus_minus_is_facet", has_mm}, {"minus_plus_is_facet", has_mp}});

    const std::vector<std::pair<RatVec, Rat>> axes{{RatVec{1, 0, 0}, Rat(b + c - 1)},
                                                   {RatVec{0, 1, 0}, Rat(a + c - 1)},
                                                   {RatVec{0, 0, 1}, Rat(a + b - 1)},
                                                   {RatVec{1, 1, 1}, Rat(1)}};
    bool ok = true;
    json values = json::array();
    for (const auto& [v, expect] : axes) {
      const Rat got = eval(x, H2Class{space, v});
      ok = ok && got == expect;
      values.push_back({{"class", to_json(v)}, {"norm", thurstonkit::to_json(got)},
                        {"expected", thurstonkit::to_json(expect)}});
    }
    add("alternating_axis_norms", ok, {{"values", values}});
  }

  if (report.tag == CaseTag::kAMinusOne) {
    const bool expect_degenerate = (b == 1 || c == 1);
    report.degenerate = !x.null_basis().empty();
    const auto null_span = x.null_basis().empty()
                               ? std::vector<RatVec>{}
                               : row_space_basis(RatMat::from_rows(x.null_basis(), 3));
    add("degenerate_null_space", report.degenerate == expect_degenerate && null_span == ball.lineality,
        {{"null_space", to_json(null_span)}, {"ball_lineality", to_json(ball.lineality)},
         {"expected_degenerate", expect_degenerate}, {"bounded", ball.bounded()}});
  } else {
    report.degenerate = !x.null_basis().empty();
  }

  {
    const auto samples = sample_classes(space, 3, options.samples, options.sample_bound, options.seed);
    bool ok = true;
    json audited = json::array();
    for (const auto& [h, e] : euler.available()) {
      const ThurstonAudit audit = check_thurston_inequality(x, e, samples);
      ok = ok && audit.passed();
      json entry{{"hierarchy", std::string(to_string(h))}, {"euler_class", to_json(e.coords)},
                 {"violations", audit.violations.size()}};
      if (!audit.passed()) {
        const auto& v = audit.violations.front();
        entry["first_violation"] = {{"class", to_json(v.alpha.coords)},
                                    {"pairing", thurstonkit::to_json(v.pairing)},
                                    {"norm", thurstonkit::to_json(v.norm)}};
      }
      audited.push_back(std::move(entry));
    }
    add("thurston_inequality_audit", ok,
        {{"samples", options.samples}, {"seed", options.seed}, {"bound", options.sample_bound}, {"classes", audited}});
  }

  {
    bool ok = true;
    json mismatches = json::array();
    const auto catalog = surface_catalog(p);
    for (const auto& w : catalog) {
      const Rat norm = eval(x, w.cls);
      if (norm != Rat(-w.euler_char)) {
        ok = false;
        mismatches.push_back({{"witness", w.name}, {"class", to_json(w.cls.coords)},
                              {"norm", thurstonkit::to_json(norm)}, {"euler_char", w.euler_char}});
      }
    }
    add("witnesses_norm_minimising", ok, {{"witnesses", catalog.size()}, {"mismatches", mismatches}});
  }

  return report;
}

}  // namespace thurstonkit
