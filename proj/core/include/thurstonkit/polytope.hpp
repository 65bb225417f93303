#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thurstonkit/rational.hpp"

namespace thurstonkit {

// Vertex and facet enumeration here is exhaustive over constraint subsets, so
// it is limited to desk-scale dimensions.
inline constexpr std::size_t kMaxPolytopeDim = 6;

// {x : <normal, x> <= rhs}
struct HalfSpace {
  RatVec normal;
  Rat rhs;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

// Intersection of half-spaces, optionally restricted to an affine subspace
// given by `equations` (each read as <normal, x> == rhs).
struct HRep {
  std::size_t dim = 0;
  std::vector<HalfSpace> halfspaces;
  std::vector<HalfSpace> equations;

  friend bool operator==(const HRep&, const HRep&) = default;
};

// conv(vertices) + cone(rays) + span(lineality). An empty vertex list encodes
// the empty polyhedron.
//
// Canonical form (produced by every routine in this header):
//   - lineality is the reduced row echelon basis of its span;
//   - vertices and rays are orthogonal to the lineality space;
//   - rays are primitive integer vectors;
//   - vertices and rays are deduplicated and sorted lexicographically.
// Two canonical VReps describe the same set iff they compare equal, provided
// their vertex and ray lists are irredundant.
struct VRep {
  std::size_t dim = 0;
  std::vector<RatVec> vertices;
  std::vector<RatVec> rays;
  std::vector<RatVec> lineality;

  bool empty() const { return vertices.empty(); }
  bool bounded() const { return rays.empty() && lineality.empty(); }

  friend bool operator==(const VRep&, const VRep&) = default;
};

VRep canonical(VRep v);

// Vertices, extreme rays and lineality of an H-representation. Enumeration
// runs in the quotient by the lineality space: the candidate vertices are all
// r-subsets of constraints (r = rank of the normals) with independent normals,
// solved exactly and filtered for feasibility.
VRep h_to_v(const HRep& h);

// Irredundant facet description of a nonempty V-representation. Facets are
// computed inside the affine hull; when the polyhedron is not full-dimensional
// the hull is returned in `equations`. Halfspaces are scaled so that rhs is
// +-1, or to a primitive integer normal when rhs is 0, and sorted.
HRep v_to_h(const VRep& v);

// Polar dual {y : <y, x> <= 1 for all x in P} of a polyhedron that is
// symmetric about the origin. Lineality of the input becomes a set of
// equations on the dual; directions orthogonal to span(P) become lineality of
// the dual. Throws ContractViolation for asymmetric input.
VRep dual_polytope(const VRep& v);

// Indices of halfspaces tight at p. Throws OutsidePolytopeError when p
// violates any halfspace or equation.
std::vector<std::size_t> tight_set(const HRep& h, const RatVec& p);

bool contains(const HRep& h, const RatVec& p);

// OFF text for a bounded three-dimensional polytope. Vertex coordinates are
// decimal approximations; faces list vertex indices in cyclic order.
std::string to_off(const VRep& v);

}  // namespace thurstonkit
