#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "thurstonkit/errors.hpp"
#include "thurstonkit/polytope.hpp"

using namespace thurstonkit;
using testing::as_set;
using testing::pm;
using testing::q;

namespace {

HRep slabs(std::size_t dim, const std::vector<RatVec>& normals) {
  HRep h;
  h.dim = dim;
  for (const auto& n : normals) {
    h.halfspaces.push_back({n, Rat(1)});
    h.halfspaces.push_back({-n, Rat(1)});
  }
  return h;
}

const std::vector<RatVec> kEulerMinus222{RatVec{3, -1, -3}, RatVec{3, -3, -1}, RatVec{-3, 1, 1}};

VRep vrep(std::size_t dim, std::vector<RatVec> vs) {
  VRep v;
  v.dim = dim;
  v.vertices = std::move(vs);
  return v;
}

}  // namespace

TEST_CASE("h_to_v: unit square") {
  const VRep v = h_to_v(slabs(2, {RatVec{1, 0}, RatVec{0, 1}}));
  CHECK(as_set(v.vertices) == std::set<RatVec>{RatVec{1, 1}, RatVec{1, -1}, RatVec{-1, 1}, RatVec{-1, -1}});
  CHECK(v.rays.empty());
  CHECK(v.lineality.empty());
}

TEST_CASE("h_to_v: Euler-class slabs of P(-4,4,4)") {
  const HRep h = slabs(3, kEulerMinus222);
  const VRep v = h_to_v(h);
  const auto expected = pm({RatVec{q(1, 3), 0, 0}, RatVec{q(2, 3), 1, 0}, RatVec{q(2, 3), 0, 1}, RatVec{1, 1, 1}});
  CHECK(as_set(v.vertices) == expected);
  CHECK(oracle::brute_vertices(h) == expected);
  CHECK(v.bounded());
}

TEST_CASE("h_to_v: strip keeps its lineality") {
  HRep h;
  h.dim = 2;
  h.halfspaces = {{RatVec{1, 0}, Rat(1)}, {RatVec{-1, 0}, Rat(1)}};
  const VRep v = h_to_v(h);
  CHECK(v.vertices == std::vector<RatVec>{RatVec{-1, 0}, RatVec{1, 0}});
  CHECK(v.lineality == std::vector<RatVec>{RatVec{0, 1}});
  CHECK(v.rays.empty());
}

TEST_CASE("h_to_v: rays of an unbounded pointed region") {
  HRep h;
  h.dim = 2;
  h.halfspaces = {{RatVec{-1, 0}, Rat(0)}, {RatVec{0, -1}, Rat(0)}};
  const VRep v = h_to_v(h);
  CHECK(v.vertices == std::vector<RatVec>{RatVec{0, 0}});
  CHECK(v.rays == std::vector<RatVec>{RatVec{0, 1}, RatVec{1, 0}});
}

TEST_CASE("h_to_v: infeasible system is empty, not an error") {
  HRep h;
  h.dim = 1;
  h.halfspaces = {{RatVec{1}, Rat(-1)}, {RatVec{-1}, Rat(-1)}};
  CHECK(h_to_v(h).empty());
}

TEST_CASE("scale limit") {
  CHECK_THROWS_AS(h_to_v(slabs(7, {RatVec::unit(7, 0)})), ScaleError);
}

TEST_CASE("v_to_h: square gives the four slabs") {
  const HRep h = v_to_h(vrep(2, {RatVec{1, 1}, RatVec{1, -1}, RatVec{-1, 1}, RatVec{-1, -1}}));
  std::set<RatVec> normals;
  for (const auto& hs : h.halfspaces) {
    CHECK(hs.rhs == Rat(1));
    normals.insert(hs.normal);
  }
  CHECK(normals == pm({RatVec{1, 0}, RatVec{0, 1}}));
  CHECK(h.equations.empty());
}

TEST_CASE("v_to_h: the P(2,2,2) ball") {
  const std::vector<RatVec> verts{RatVec{1, 0, 0}, RatVec{-1, 0, 0}, RatVec{0, 1, 0},  RatVec{0, -1, 0},
                                  RatVec{0, 0, 1}, RatVec{0, 0, -1}, RatVec{1, 1, 1},  RatVec{-1, -1, -1}};
  const HRep h = v_to_h(vrep(3, verts));
  std::set<RatVec> normals;
  for (const auto& hs : h.halfspaces) normals.insert(hs.normal);
  // Pairs of facets of the generic ball are coplanar here; six remain.
  CHECK(normals == oracle::brute_facet_normals(verts, 3));
  CHECK(h.halfspaces.size() == 6);
  CHECK(normals.count(RatVec{1, -1, -1}) == 1);
  CHECK(h_to_v(h).vertices == canonical(vrep(3, verts)).vertices);
}

TEST_CASE("v_to_h: a point is zero-dimensional") {
  const HRep h = v_to_h(vrep(3, {RatVec{0, 0, 0}}));
  CHECK(h.halfspaces.empty());
  CHECK(h.equations.size() == 3);
  CHECK(h_to_v(h).vertices == std::vector<RatVec>{RatVec{0, 0, 0}});
}

TEST_CASE("dual_polytope examples") {
  const VRep square = vrep(2, {RatVec{1, 1}, RatVec{1, -1}, RatVec{-1, 1}, RatVec{-1, -1}});
  CHECK(as_set(dual_polytope(square).vertices) == pm({RatVec{1, 0}, RatVec{0, 1}}));

  const VRep ball = vrep(3, {RatVec{q(1, 3), 0, 0}, RatVec{q(-1, 3), 0, 0}, RatVec{q(2, 3), 1, 0},
                             RatVec{q(-2, 3), -1, 0}, RatVec{q(2, 3), 0, 1}, RatVec{q(-2, 3), 0, -1},
                             RatVec{1, 1, 1}, RatVec{-1, -1, -1}});
  CHECK(as_set(dual_polytope(ball).vertices) == pm({kEulerMinus222[0], kEulerMinus222[1], kEulerMinus222[2]}));

  const VRep segment = dual_polytope(vrep(2, {RatVec{1, 0}, RatVec{-1, 0}}));
  CHECK(as_set(segment.vertices) == pm({RatVec{1, 0}}));
  CHECK(segment.lineality == std::vector<RatVec>{RatVec{0, 1}});
  CHECK(dual_polytope(segment) == canonical(vrep(2, {RatVec{1, 0}, RatVec{-1, 0}})));

  CHECK_THROWS_AS(dual_polytope(vrep(2, {RatVec{1, 0}, RatVec{0, 1}})), ContractViolation);
}

TEST_CASE("tight_set") {
  HRep square;
  square.dim = 2;
  square.halfspaces = {{RatVec{1, 0}, Rat(1)}, {RatVec{-1, 0}, Rat(1)}, {RatVec{0, 1}, Rat(1)}, {RatVec{0, -1}, Rat(1)}};
  CHECK(tight_set(square, RatVec{1, 1}) == std::vector<std::size_t>{0, 2});
  CHECK(tight_set(square, RatVec{1, 0}) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(tight_set(square, RatVec{2, 0}), OutsidePolytopeError);
  CHECK(contains(square, RatVec{q(1, 2), -1}));
  CHECK_FALSE(contains(square, RatVec{q(3, 2), 0}));

  // Slabs ordered +G, -G for each class; (1,1,1) pairs to -1 with each class.
  const HRep h = slabs(3, kEulerMinus222);
  CHECK(tight_set(h, RatVec{1, 1, 1}) == std::vector<std::size_t>{1, 3, 5});
}

TEST_CASE("OFF output") {
  const std::string off = to_off(h_to_v(slabs(3, kEulerMinus222)));
  CHECK(off.rfind("OFF\n8 6 0\n", 0) == 0);
  CHECK_THROWS_AS(to_off(h_to_v(slabs(2, {RatVec{1, 0}}))), ContractViolation);
}

TEST_CASE("random H-reps agree with the brute-force oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim_d(1, 3), count_d(1, 8), rhs_d(-1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    HRep h;
    h.dim = dim_d(rng);
    const int m = count_d(rng);
    for (int i = 0; i < m; ++i) {
      RatVec n = oracle::random_int_vec(rng, h.dim, -3, 3);
      if (n.is_zero()) n = RatVec::unit(h.dim, 0);
      h.halfspaces.push_back({n, Rat(rhs_d(rng))});
    }
    std::vector<RatVec> normals;
    for (const auto& hs : h.halfspaces) normals.push_back(hs.normal);
    const VRep v = h_to_v(h);
    for (const auto& x : v.vertices) CHECK(oracle::feasible(h, x));
    if (oracle::full_column_rank(normals, h.dim)) {
      CHECK(as_set(v.vertices) == oracle::brute_vertices(h));
      if (!v.empty()) {
        HRep cone = h;
        for (auto& hs : cone.halfspaces) hs.rhs = Rat(0);
        CHECK(as_set(v.rays) == oracle::brute_rays(cone));
      }
    }
  }
}

TEST_CASE("round trip h_to_v(v_to_h(V)) recovers the extreme points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim_d(1, 3), count_d(1, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = dim_d(rng);
    std::vector<RatVec> pts;
    const int n = count_d(rng);
    for (int i = 0; i < n; ++i) pts.push_back(oracle::random_int_vec(rng, dim, -3, 3));
    const VRep back = h_to_v(v_to_h(vrep(dim, pts)));
    CHECK(as_set(back.vertices) == oracle::extreme_points(pts));
    CHECK(back.bounded());
  }
}
