#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "thurstonkit/branched.hpp"
#include "thurstonkit/errors.hpp"
#include "thurstonkit/polytope.hpp"
#include "thurstonkit/report.hpp"
#include "thurstonkit/seminorm.hpp"

namespace thurstonkit {

// The three-component pretzel link P(2a, 2b, 2c), normalised by mirroring and
// relabelling so that b, c > 0. Classes are written in the bases (l_1, l_2,
// l_3) and (m_1, m_2, m_3) of the link exterior.
struct PretzelParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend bool operator==(const PretzelParams&, const PretzelParams&) = default;
  friend auto operator<=>(const PretzelParams&, const PretzelParams&) = default;
};

// Throws ContractViolation unless a != 0, b > 0 and c > 0.
void validate(const PretzelParams& p);

// "P(2a,2b,2c)" with the even twist counts, e.g. "P(-4,4,4)".
std::string space_tag(const PretzelParams& p);

enum class CaseTag {
  kAlternating,   // a > 0
  kAMinusOne,     // a == -1
  kGoodNegative,  // a <= -2 and ab + bc + ac <= a
  kUnknown,       // a <= -2 and ab + bc + ac > a: the ball is not determined
};

std::string_view to_string(CaseTag tag);
CaseTag classify(const PretzelParams& p);

// The four sutured hierarchies; the signs record whether the boundary
// orientations of the two decomposing disks agree with l_1 and l_2.
enum class Hierarchy { kMinusMinus, kMinusPlus, kPlusMinus, kPlusPlus };

std::string_view to_string(Hierarchy h);

// Closed-form Euler class of a hierarchy. The ++/+- hierarchies only exist for
// a <= -2; requesting them otherwise throws CaseUnsupported.
H1Class euler_class_formula(const PretzelParams& p, Hierarchy h);

struct EulerClasses {
  H1Class minus_minus;
  H1Class minus_plus;
  std::optional<H1Class> plus_minus;
  std::optional<H1Class> plus_plus;

  // The classes that exist for these parameters, in hierarchy order.
  std::vector<std::pair<Hierarchy, H1Class>> available() const;
};

// Euler classes from the closed formulas, each re-derived independently:
// Gamma_{--} from the sector table, Gamma_{-+} and Gamma_{++} by reversing D_2.
// Throws VerificationFailure if any two derivations disagree.
EulerClasses euler_classes(const PretzelParams& p);

// Sector table of the branched surface of the (--) hierarchy, rows with zero
// multiplicity omitted.
BranchedSurfaceSpec sector_table(const PretzelParams& p);

// Reversal of D_2 in the (--) hierarchy (|D_2 cap gamma_1| = 2|a|) or, for
// Hierarchy::kPlusMinus, in the (+-) hierarchy (|D_2 cap gamma_2| = 2|a| - 2).
DiskSwapRecord d2_swap_record(const PretzelParams& p, Hierarchy from);

// Slabs |<Gamma, alpha>| <= 1 over every available Euler class. By the
// Thurston inequality the ball is contained in this polyhedron.
HRep euler_slab_system(const PretzelParams& p);

// Raised by thurston_ball in the undetermined region. Carries the Euler-class
// slab polyhedron, which is only an outer bound for the ball.
class UnknownRegion : public CaseUnsupported {
 public:
  UnknownRegion(const std::string& what, HRep outer_bound)
      : CaseUnsupported(what), outer_bound_(std::move(outer_bound)) {}
  const HRep& outer_bound() const { return outer_bound_; }

 private:
  HRep outer_bound_;
};

// Thurston ball from the vertex formulas of the three covered cases, in
// canonical form. For a == -1 and b == 1 or c == 1 the degenerate direction is
// lineality.
VRep thurston_ball(const PretzelParams& p);

// Seminorm whose duals are the vertices of the polar of thurston_ball.
PolyhedralSeminorm seminorm_of(const PretzelParams& p);

// Named taut surfaces with their Euler characteristics:
//   S (1,1,1); S1, -S1, S2, S3 (coordinate disks);
//   Q (c, b+c-1, 0), Q' (b, 0, b+c-1) for a <= -2, punctured by l_3;
//   A (1,1,0), A' (1,0,1) for a < 0, punctured by l_3.
std::vector<SurfaceWitness> surface_catalog(const PretzelParams& p);

// One catalog entry by name; WitnessUnavailable when it is not valid for p.
SurfaceWitness surface_witness(const PretzelParams& p, std::string_view name);

// Faces of the good non-alternating ball: each signed Euler class with the
// classes it fully marks. Only defined in the kGoodNegative case.
struct FaceMarking {
  Hierarchy hierarchy;
  int sign;  // +1 or -1
  H1Class euler_class;
  std::vector<H2Class> marked;
};

std::vector<FaceMarking> face_markings(const PretzelParams& p);

// Deterministic integer classes with coordinates in [-bound, bound].
std::vector<H2Class> sample_classes(const std::string& space, std::size_t rank, std::size_t n,
                                    std::int64_t bound, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr std::size_t kDefaultSamples = 1000;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  std::int64_t sample_bound = 10;
};

struct CaseReport {
  PretzelParams params;
  CaseTag tag = CaseTag::kUnknown;
  bool degenerate = false;
  std::vector<Check> checks;

  bool passed() const { return all_pass(checks); }
  nlohmann::json to_json() const;
};

// Runs every exact check available for the case of p. Throws UnknownRegion in
// the undetermined region.
CaseReport verify_case(const PretzelParams& p, const VerifyOptions& options = {});

}  // namespace thurstonkit
