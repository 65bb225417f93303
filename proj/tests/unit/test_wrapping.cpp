#include <doctest.h>

#include "helpers.hpp"
#include "thurstonkit/errors.hpp"
#include "thurstonkit/wrapping.hpp"

using namespace thurstonkit;
using testing::q;

namespace {

H2Class t(const std::string& tag, RatVec v) { return H2Class{tag, std::move(v)}; }

}  // namespace

TEST_CASE("torus link seminorm") {
  const auto x0 = torus_link_seminorm(2);
  CHECK(x0.space() == "T(2,4)");
  CHECK(eval(x0, t("T(2,4)", RatVec{1, 0})) == Rat(1));
  CHECK(eval(x0, t("T(2,4)", RatVec{1, 1})) == Rat(0));
  CHECK(eval(x0, t("T(2,4)", RatVec{2, 3})) == Rat(1));
  CHECK(null_space(x0) == std::vector<H2Class>{t("T(2,4)", RatVec{1, 1})});
  CHECK_THROWS_AS(torus_link_seminorm(1), ContractViolation);
}

TEST_CASE("the closed formula |p - q|(c - 1) is forced by the two facts") {
  // Oracle: any seminorm with x(l1) = c - 1 and x(l1 + l2) = 0 satisfies
  // x(p, q) = x((p - q) l1 + q (l1 + l2)) = |p - q| x(l1) by homogeneity and
  // the triangle inequality in both directions.
  for (std::int64_t c = 2; c <= 5; ++c) {
    const auto x0 = torus_link_seminorm(c);
    for (std::int64_t p = -5; p <= 5; ++p) {
      for (std::int64_t s = -5; s <= 5; ++s) {
        const Rat expected = Rat(p - s).abs() * Rat(c - 1);
        CHECK(eval(x0, t(x0.space(), RatVec{p, s})) == expected);
      }
    }
  }
}

TEST_CASE("wrapping numbers at (-2,2,2)") {
  const PretzelParams p{-2, 2, 2};
  const WrapScenario s = pretzel_wrap_scenario(p);
  const H2Class alpha = t("T(2,4)", RatVec{1, 0});
  const H2Class beta = t("T(2,4)", RatVec{2, 3});
  CHECK(wrap_via_restriction(s, alpha) == Rat(2));
  CHECK(wrap_via_restriction(s, beta) == Rat(2));
  CHECK(wrap_via_restriction(s, t("T(2,4)", RatVec{3, 3})) == Rat(6));
  CHECK(triangle_defect(s, alpha, beta) == Rat(2));

  const auto cov = covering_witness(s, t("T(2,4)", RatVec{3, 3}));
  REQUIRE(cov);
  CHECK(cov->witness == "A");
  CHECK(cov->multiple == 3);
}

TEST_CASE("defect vanishes inside a common cone and for beta = 0") {
  const WrapScenario s = pretzel_wrap_scenario({-2, 2, 2});
  const H2Class alpha = t("T(2,4)", RatVec{1, 0});
  CHECK(triangle_defect(s, alpha, t("T(2,4)", RatVec{2, 0})) == Rat(0));
  CHECK(triangle_defect(s, alpha, t("T(2,4)", RatVec{0, 0})) == Rat(0));
}

TEST_CASE("uncovered classes are refused") {
  const WrapScenario s = pretzel_wrap_scenario({-2, 2, 2});
  CHECK_FALSE(covering_witness(s, t("T(2,4)", RatVec{0, 1})));
  CHECK_THROWS_AS(wrap_via_restriction(s, t("T(2,4)", RatVec{0, 1})), HypothesisNotCertified);
  // Negative multiples of a witness are not covered either.
  CHECK_THROWS_AS(wrap_via_restriction(s, t("T(2,4)", RatVec{-1, 0})), HypothesisNotCertified);
}

TEST_CASE("scenario reports") {
  const ScenarioReport r = baker_taylor_scenario({-2, 2, 2});
  CHECK(r.passed());
  CHECK(*r.defect == Rat(2));
  CHECK(r.hypotheses.size() == 3);
  CHECK(r.notes.empty());
  const auto j = r.to_json();
  CHECK(j["defect"] == nlohmann::json::array({2, 1}));
  CHECK(j["wrap"]["alpha_plus_beta"] == nlohmann::json::array({6, 1}));
  CHECK(j["hypotheses"]["witness_coverage"]["pass"] == true);

  const ScenarioReport r3 = baker_taylor_scenario({-3, 2, 2});
  CHECK(r3.passed());
  CHECK(*r3.defect == Rat(2));

  const ScenarioReport wide = baker_taylor_scenario({-3, 3, 2});
  CHECK(wide.passed());
  CHECK(*wide.defect == Rat(4));
  CHECK(wide.notes.size() == 1);

  CHECK_THROWS_AS(baker_taylor_scenario({-1, 2, 2}), ContractViolation);
  CHECK_THROWS_AS(baker_taylor_scenario({-2, 1, 2}), ContractViolation);
  CHECK_THROWS_AS(baker_taylor_scenario({-2, 5, 5}), ContractViolation);
}

TEST_CASE("defect identity and positivity across the valid region") {
  for (std::int64_t a = -6; a <= -2; ++a) {
    for (std::int64_t b = 2; b <= 6; ++b) {
      for (std::int64_t c = 2; c <= 6; ++c) {
        const PretzelParams p{a, b, c};
        if (!scenario_applies(p)) continue;
        const ScenarioReport r = baker_taylor_scenario(p);
        CHECK(r.passed());
        REQUIRE(r.defect);
        CHECK(*r.defect == Rat(2 * (b - 1) * (c - 1)));
        CHECK(*r.defect > Rat(0));
        CHECK(r.wrap_alpha->sign() >= 0);
      }
    }
  }
}
