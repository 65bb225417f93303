#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thurstonkit/polytope.hpp"
#include "thurstonkit/rational.hpp"

namespace thurstonkit {

// A class in H_2(M, dM) written in the surface basis (l_1, ..., l_n). `space`
// names the manifold; classes from different spaces never mix.
struct H2Class {
  std::string space;
  RatVec coords;

  std::size_t rank() const { return coords.dim(); }
  friend bool operator==(const H2Class&, const H2Class&) = default;
};

// A class in H_1(M) written in the meridian basis (m_1, ..., m_n), dual to the
// surface basis: <m_i, l_j> = delta_ij.
struct H1Class {
  std::string space;
  RatVec coords;

  std::size_t rank() const { return coords.dim(); }
  friend bool operator==(const H1Class&, const H1Class&) = default;
};

// Dot-product pairing. Throws ContractViolation on a space or rank mismatch.
Rat pairing(const H1Class& beta, const H2Class& alpha);

// A certified surface representative: its class, Euler characteristic, and
// optionally how many times it meets a distinguished knot.
//
// `euler_char` is the Euler characteristic of the surface in the space of
// `cls`. When the surface comes from a larger manifold by removing a knot
// neighbourhood, `k_intersections` is the number of punctures, and the
// surface before puncturing has Euler characteristic euler_char + k.
struct SurfaceWitness {
  std::string name;
  H2Class cls;
  std::int64_t euler_char = 0;
  std::optional<std::int64_t> k_intersections;

  std::int64_t unpunctured_euler_char() const { return euler_char + k_intersections.value_or(0); }
};

// Linear map between surface-class lattices, acting on column vectors.
class LinearMap {
 public:
  LinearMap(RatMat matrix, std::string from_space, std::string to_space);

  static LinearMap identity(std::string space, std::size_t rank);
  static LinearMap zero(std::string from_space, std::size_t from_rank, std::string to_space,
                        std::size_t to_rank);

  const RatMat& matrix() const { return matrix_; }
  const std::string& from_space() const { return from_; }
  const std::string& to_space() const { return to_; }

  H2Class apply(const H2Class& alpha) const;
  // Transpose action on functionals: (f^T beta)(alpha) = beta(f alpha).
  H1Class pullback(const H1Class& beta) const;

 private:
  RatMat matrix_;
  std::string from_;
  std::string to_;
};

// x(alpha) = max over dual functionals beta of <beta, alpha>.
//
// The dual set must be closed under negation; an empty set is read as the
// zero seminorm. The reduced dual set (vertices of the convex hull, which are
// the vertices of the dual unit ball) and the null space are computed once at
// construction, so a seminorm is immutable and safe to share across threads.
class PolyhedralSeminorm {
 public:
  PolyhedralSeminorm(std::string space, std::size_t rank, std::vector<RatVec> duals);

  // Adds the negation of every input functional.
  static PolyhedralSeminorm symmetrized(std::string space, std::size_t rank,
                                        const std::vector<RatVec>& duals);

  const std::string& space() const { return space_; }
  std::size_t rank() const { return rank_; }
  const std::vector<RatVec>& duals() const { return duals_; }
  const std::vector<RatVec>& reduced_duals() const { return reduced_; }
  const std::vector<RatVec>& null_basis() const { return null_; }

 private:
  std::string space_;
  std::size_t rank_;
  std::vector<RatVec> duals_;
  std::vector<RatVec> reduced_;
  std::vector<RatVec> null_;
};

Rat eval(const PolyhedralSeminorm& x, const H2Class& alpha);

PolyhedralSeminorm reduce_duals(const PolyhedralSeminorm& x);

std::vector<H2Class> null_space(const PolyhedralSeminorm& x);

// h_to_v of the slabs <beta, alpha> <= 1; the lineality space is the null
// space of x.
VRep unit_ball(const PolyhedralSeminorm& x);

// Reduced duals attaining x(alpha). Throws ZeroNormError when x(alpha) == 0.
std::vector<H1Class> argmax_duals(const PolyhedralSeminorm& x, const H2Class& alpha);

// x(alpha + beta) == x(alpha) + x(beta).
bool additive(const PolyhedralSeminorm& x, const H2Class& alpha, const H2Class& beta);

// Whether alpha and beta lie in a common closed cone over a face of the unit
// ball, decided by a shared maximizing dual vertex. A class of norm zero
// shares every cone.
bool same_closed_cone(const PolyhedralSeminorm& x, const H2Class& alpha, const H2Class& beta);

// True when alpha has norm zero or several reduced duals attain x(alpha).
// Throws ContractViolation for the zero class.
// Primitivity of alpha is not checked; the test is scale-invariant.
bool is_corner(const PolyhedralSeminorm& x, const H2Class& alpha);

// x1 o f1 + x2 o f2. Duals are f1^T b1 + f2^T b2 over all pairs, reduced.
PolyhedralSeminorm pullback_sum(const LinearMap& f1, const PolyhedralSeminorm& x1,
                                const LinearMap& f2, const PolyhedralSeminorm& x2);

struct InequalityViolation {
  H2Class alpha;
  Rat pairing;  // <e, alpha>
  Rat norm;     // x(alpha)
};

struct ThurstonAudit {
  std::size_t samples = 0;
  std::vector<InequalityViolation> violations;

  bool passed() const { return violations.empty(); }
};

// Every sample with |<e, alpha>| > x(alpha).
ThurstonAudit check_thurston_inequality(const PolyhedralSeminorm& x, const H1Class& e,
                                        const std::vector<H2Class>& samples);

// <e, [S]> == chi(S). When this holds and e satisfies the Thurston inequality,
// S is norm-minimising with x([S]) = -<e, [S]>.
bool fully_marked(const H1Class& e, const SurfaceWitness& w);

}  // namespace thurstonkit
