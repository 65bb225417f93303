#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thurstonkit/pretzel.hpp"
#include "thurstonkit/report.hpp"
#include "thurstonkit/seminorm.hpp"

namespace thurstonkit {

// x0(p, q) = (c - 1)|p - q| on the exterior of the torus link T(2, 2c), with
// duals +-(c - 1)(m_1 - m_2). Throws ContractViolation for c < 2.
PolyhedralSeminorm torus_link_seminorm(std::int64_t c);

// "T(2,2c)" with the twist count substituted.
std::string torus_link_tag(std::int64_t c);

// A knot K in an ambient manifold M with exterior M(K). `restrict` sends a
// class of M to the class of its surfaces cut along K; witnesses are surfaces
// in M(K) known to be norm-minimising there.
struct WrapScenario {
  PolyhedralSeminorm x_ambient;
  PolyhedralSeminorm x_exterior;
  LinearMap restrict;
  std::vector<SurfaceWitness> witnesses;
};

// How a class is certified: restrict(alpha) = multiple * witness class.
struct Coverage {
  std::string witness;  // empty for alpha == 0
  std::int64_t multiple = 0;
};

// The first witness whose positive integer multiple is restrict(alpha) and
// whose norm equals -euler_char. The zero class is covered with multiple 0.
std::optional<Coverage> covering_witness(const WrapScenario& s, const H2Class& alpha);

// x_exterior(restrict alpha) - x_ambient(alpha). Without a covering witness the
// difference is only a lower bound and HypothesisNotCertified is thrown.
// VerificationFailure if the difference is negative.
Rat wrap_via_restriction(const WrapScenario& s, const H2Class& alpha);

// wrap(alpha + beta) - wrap(alpha) - wrap(beta); positive means the triangle
// inequality fails.
Rat triangle_defect(const WrapScenario& s, const H2Class& alpha, const H2Class& beta);

// The scenario for l_3 inside the exterior of l_1 and l_2 in P(2a,2b,2c). Needs
// a <= -2, b >= 2, c >= 2 and ab + bc + ac <= a; ContractViolation otherwise.
WrapScenario pretzel_wrap_scenario(const PretzelParams& p);

struct ScenarioReport {
  PretzelParams params;
  H2Class alpha;
  H2Class beta;
  std::optional<Rat> wrap_alpha;
  std::optional<Rat> wrap_beta;
  std::optional<Rat> wrap_sum;
  std::optional<Rat> defect;
  std::vector<Check> hypotheses;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const { return all_pass(hypotheses) && all_pass(checks); }
  nlohmann::json to_json() const;
};

// alpha = (b - 1) l_1, beta = c l_1 + (b + c - 1) l_2 in the torus link
// exterior. Checks the three cone/coverage hypotheses, the defect identity
// defect = x0(alpha) + x0(beta), and the bound defect >= c - 1 > 0.
ScenarioReport baker_taylor_scenario(const PretzelParams& p);

// Whether p satisfies the constraints of baker_taylor_scenario.
bool scenario_applies(const PretzelParams& p);

}  // namespace thurstonkit
