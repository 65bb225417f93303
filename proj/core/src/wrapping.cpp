#include "thurstonkit/wrapping.hpp"

#include "thurstonkit/json_io.hpp"

namespace thurstonkit {
namespace {

using nlohmann::json;

json opt_json(const std::optional<Rat>& r) { return r ? to_json(*r) : json(nullptr); }

// n >= 1 with v == n * w, if any.
std::optional<std::int64_t> positive_multiple(const RatVec& v, const RatVec& w) {
  if (v.dim() != w.dim() || w.is_zero()) return std::nullopt;
  std::optional<Rat> ratio;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (w[i].is_zero()) {
      if (!v[i].is_zero()) return std::nullopt;
      continue;
    }
    const Rat r = v[i] / w[i];
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  if (!ratio || ratio->sign() <= 0 || !ratio->is_integer()) return std::nullopt;
  return to_int64(*ratio);
}

}  // namespace

std::string torus_link_tag(std::int64_t c) { return "T(2," + std::to_string(2 * c) + ")"; }

PolyhedralSeminorm torus_link_seminorm(std::int64_t c) {
  if (c < 2) throw ContractViolation("torus link seminorm needs c >= 2; got c = " + std::to_string(c));
  const RatVec d{Rat(c - 1), Rat(1 - c)};
  return PolyhedralSeminorm(torus_link_tag(c), 2, {d, -d});
}

std::optional<Coverage> covering_witness(const WrapScenario& s, const H2Class& alpha) {
  const H2Class image = s.restrict.apply(alpha);
  if (image.coords.is_zero()) return Coverage{"", 0};
  for (const auto& w : s.witnesses) {
    if (w.cls.space != image.space) continue;
    const auto n = positive_multiple(image.coords, w.cls.coords);
    if (!n) continue;
    if (eval(s.x_exterior, w.cls) != Rat(-w.euler_char)) continue;
    return Coverage{w.name, *n};
  }
  return std::nullopt;
}

Rat wrap_via_restriction(const WrapScenario& s, const H2Class& alpha) {
  if (!covering_witness(s, alpha)) {
    throw HypothesisNotCertified("no norm-minimising witness covers " + alpha.coords.str() +
                                 "; the norm difference is only a lower bound for the wrapping number");
  }
  const Rat w = eval(s.x_exterior, s.restrict.apply(alpha)) - eval(s.x_ambient, alpha);
  if (w.sign() < 0) {
    throw VerificationFailure("negative wrapping number " + w.str() + " for " + alpha.coords.str());
  }
  return w;
}

Rat triangle_defect(const WrapScenario& s, const H2Class& alpha, const H2Class& beta) {
  const H2Class sum{alpha.space, alpha.coords + beta.coords};
  return wrap_via_restriction(s, sum) - wrap_via_restriction(s, alpha) - wrap_via_restriction(s, beta);
}

bool scenario_applies(const PretzelParams& p) {
  return p.a <= -2 && p.b >= 2 && p.c >= 2 && p.a * p.b + p.b * p.c + p.a * p.c <= p.a;
}

WrapScenario pretzel_wrap_scenario(const PretzelParams& p) {
  if (!scenario_applies(p)) {
    throw ContractViolation("the wrapping scenario needs a <= -2, b >= 2, c >= 2 and ab + bc + ac <= a; got (" +
                            std::to_string(p.a) + ", " + std::to_string(p.b) + ", " + std::to_string(p.c) + ")");
  }
  RatMat inclusion(3, 2);
  inclusion(0, 0) = 1;
  inclusion(1, 1) = 1;
  std::vector<SurfaceWitness> witnesses;
  for (const char* name : {"S1", "Q", "A"}) witnesses.push_back(surface_witness(p, name));
  return WrapScenario{torus_link_seminorm(p.c), seminorm_of(p),
                      LinearMap(std::move(inclusion), torus_link_tag(p.c), space_tag(p)), std::move(witnesses)};
}

json ScenarioReport::to_json() const {
  json j;
  j["params"] = {{"a", params.a}, {"b", params.b}, {"c", params.c}};
  j["alpha"] = thurstonkit::to_json(alpha.coords);
  j["beta"] = thurstonkit::to_json(beta.coords);
  j["wrap"] = {{"alpha", opt_json(wrap_alpha)}, {"beta", opt_json(wrap_beta)}, {"alpha_plus_beta", opt_json(wrap_sum)}};
  j["defect"] = opt_json(defect);
  j["hypotheses"] = json::object();
  for (const auto& h : hypotheses) j["hypotheses"][h.name] = thurstonkit::to_json(h);
  j["checks"] = json::array();
  for (const auto& c : checks) j["checks"].push_back(thurstonkit::to_json(c));
  j["notes"] = notes;
  j["pass"] = passed();
  return j;
}

ScenarioReport baker_taylor_scenario(const PretzelParams& p) {
  const WrapScenario s = pretzel_wrap_scenario(p);
  const std::int64_t b = p.b;
  const std::int64_t c = p.c;
  const std::string torus = torus_link_tag(c);

  ScenarioReport r;
  r.params = p;
  r.alpha = H2Class{torus, RatVec{Rat(b - 1), Rat(0)}};
  r.beta = H2Class{torus, RatVec{Rat(c), Rat(b + c - 1)}};
  const H2Class sum{torus, r.alpha.coords + r.beta.coords};

  const Rat x0_alpha = eval(s.x_ambient, r.alpha);
  const Rat x0_beta = eval(s.x_ambient, r.beta);

  const bool split = !same_closed_cone(s.x_ambient, r.alpha, r.beta);
  r.hypotheses.push_back({"ambient_cones_differ", split,
                          {{"x0_alpha", to_json(x0_alpha)}, {"x0_beta", to_json(x0_beta)},
                           {"x0_alpha_plus_beta", to_json(eval(s.x_ambient, sum))}}});

  const H2Class ra = s.restrict.apply(r.alpha);
  const H2Class rb = s.restrict.apply(r.beta);
  r.hypotheses.push_back({"exterior_cone_shared", same_closed_cone(s.x_exterior, ra, rb),
                          {{"restricted_alpha", to_json(ra.coords)}, {"restricted_beta", to_json(rb.coords)}}});

  json coverage = json::object();
  bool covered = true;
  for (const auto& [label, cls] : {std::pair{"alpha", r.alpha}, std::pair{"beta", r.beta},
                                   std::pair{"alpha_plus_beta", sum}}) {
    const auto cov = covering_witness(s, cls);
    covered = covered && cov.has_value();
    coverage[label] = cov ? json{{"witness", cov->witness}, {"copies", cov->multiple}} : json(nullptr);
  }
  r.hypotheses.push_back({"witness_coverage", covered, coverage});
  if (!covered) return r;

  r.wrap_alpha = wrap_via_restriction(s, r.alpha);
  r.wrap_beta = wrap_via_restriction(s, r.beta);
  r.wrap_sum = wrap_via_restriction(s, sum);
  r.defect = *r.wrap_sum - *r.wrap_alpha - *r.wrap_beta;

  const Rat expected = x0_alpha + x0_beta;
  r.checks.push_back({"defect_identity", *r.defect == expected,
                      {{"defect", to_json(*r.defect)}, {"x0_alpha_plus_x0_beta", to_json(expected)},
                       {"closed_form", 2 * (b - 1) * (c - 1)}}});
  r.checks.push_back({"defect_bound", *r.defect >= Rat(c - 1) && Rat(c - 1) > Rat(0),
                      {{"defect", to_json(*r.defect)}, {"bound", c - 1}}});

  const SurfaceWitness q = surface_witness(p, "Q");
  const SurfaceWitness a = surface_witness(p, "A");
  const Rat sum_expect = Rat(b + c - 1) * Rat(*a.k_intersections);
  r.checks.push_back({"wraps_match_punctures",
                      *r.wrap_beta == Rat(*q.k_intersections) && *r.wrap_sum == sum_expect,
                      {{"wrap_beta", to_json(*r.wrap_beta)}, {"q_punctures", *q.k_intersections},
                       {"wrap_alpha_plus_beta", to_json(*r.wrap_sum)}, {"copies_of_a_times_punctures", to_json(sum_expect)}}});

  if (x0_alpha != Rat(c - 1)) {
    r.notes.push_back("x0(alpha) = " + x0_alpha.str() + " = (b-1)(c-1), not c-1 = " + std::to_string(c - 1) +
                      "; only the bound defect >= c-1 is relied on");
  }
  return r;
}

}  // namespace thurstonkit
