#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thurstonkit/rational.hpp"
#include "thurstonkit/seminorm.hpp"

namespace thurstonkit {

// One row of a sector table: `count` identical sectors s, each contributing
// chi_m(s) * [a(s)] to the maw dual graph, where chi_m(s) = chi(s) - dc(s)/2.
//
// Either chi and double_corners, or chi_m, must be present. When all three are
// given they must agree exactly. A single sector may have half-integral chi_m;
// only the total class is required to be integral.
struct SectorRecord {
  std::string name;
  std::optional<std::int64_t> chi;
  std::optional<std::int64_t> double_corners;
  std::optional<Rat> chi_m;
  H1Class dual_class;
  std::int64_t count = 1;
};

// Combinatorial data of a branched surface: its sectors and the ambient space
// of their dual arcs. The data are trusted; nothing checks that the sectors
// assemble into an embedded branched surface.
struct BranchedSurfaceSpec {
  std::string ambient;
  std::size_t rank = 0;  // rank of H_1; inferred from the sectors when 0
  std::vector<SectorRecord> sectors;
};

// A decomposing disk D whose coorientation is reversed. `suture_intersections`
// is |D cap gamma| and `dual_arc` the class of the dual arc a(D).
struct DiskSwapRecord {
  std::string disk_name;
  std::int64_t suture_intersections = 2;
  H1Class dual_arc;
};

// Throws MalformedInput for records that are incomplete or inconsistent.
void validate(const SectorRecord& s);
void validate(const BranchedSurfaceSpec& spec);
void validate(const DiskSwapRecord& rec);

Rat maw_euler_char(const SectorRecord& s);

// Sum over sectors of count * chi_m(s) * [a(s)]. Throws IntegralityError when
// the total is not integral.
H1Class gamma_class(const BranchedSurfaceSpec& spec);

// Total number of sectors, counting multiplicity.
std::int64_t total_sector_count(const BranchedSurfaceSpec& spec);

// (2 - |D cap gamma|) * [a(D)]: the change in Euler class when D is reversed.
H1Class swap_difference(const DiskSwapRecord& rec);

// e - (2 - |D cap gamma|) * [a(D)].
H1Class swap_disk_orientation(const H1Class& e, const DiskSwapRecord& rec);

}  // namespace thurstonkit
