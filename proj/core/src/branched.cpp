#include "thurstonkit/branched.hpp"

#include "thurstonkit/errors.hpp"

namespace thurstonkit {

void validate(const SectorRecord& s) {
  const std::string where = "sector '" + s.name + "'";
  if (s.count <= 0) throw MalformedInput(where + ": count must be positive");
  if (s.double_corners && *s.double_corners < 0) {
    throw MalformedInput(where + ": double_corners must be nonnegative");
  }
  const bool topological = s.chi.has_value() && s.double_corners.has_value();
  if (!topological && !s.chi_m) {
    throw MalformedInput(where + ": needs chi and double_corners, or chi_m");
  }
  if (topological && s.chi_m) {
    const Rat derived = Rat(*s.chi) - Rat(*s.double_corners, 2);
    if (derived != *s.chi_m) {
      throw MalformedInput(where + ": chi_m " + s.chi_m->str() + " disagrees with chi - dc/2 = " +
                           derived.str());
    }
  }
  if (s.dual_class.rank() == 0) throw MalformedInput(where + ": dual_class is empty");
}

void validate(const BranchedSurfaceSpec& spec) {
  std::size_t rank = spec.rank;
  for (const auto& s : spec.sectors) {
    validate(s);
    if (s.dual_class.space != spec.ambient) {
      throw MalformedInput("sector '" + s.name + "': dual_class space '" + s.dual_class.space +
                           "' differs from ambient '" + spec.ambient + "'");
    }
    if (rank == 0) rank = s.dual_class.rank();
    if (s.dual_class.rank() != rank) {
      throw MalformedInput("sector '" + s.name + "': dual_class has rank " +
                           std::to_string(s.dual_class.rank()) + ", expected " + std::to_string(rank));
    }
  }
}

void validate(const DiskSwapRecord& rec) {
  const auto k = rec.suture_intersections;
  if (k < 2 || k % 2 != 0) {
    throw MalformedInput("disk '" + rec.disk_name + "': suture_intersections must be even and >= 2, got " +
                         std::to_string(k));
  }
}

Rat maw_euler_char(const SectorRecord& s) {
  validate(s);
  if (s.chi_m) return *s.chi_m;
  return Rat(*s.chi) - Rat(*s.double_corners, 2);
}

H1Class gamma_class(const BranchedSurfaceSpec& spec) {
  validate(spec);
  std::size_t rank = spec.rank;
  if (rank == 0 && !spec.sectors.empty()) rank = spec.sectors.front().dual_class.rank();
  if (rank == 0) throw MalformedInput("branched surface '" + spec.ambient + "': no sectors and no rank");
  RatVec total(rank);
  for (const auto& s : spec.sectors) total += (Rat(s.count) * maw_euler_char(s)) * s.dual_class.coords;
  if (!total.is_integral()) {
    throw IntegralityError("maw dual graph total " + total.str() + " is not an integral class");
  }
  return H1Class{spec.ambient, std::move(total)};
}

std::int64_t total_sector_count(const BranchedSurfaceSpec& spec) {
  std::int64_t n = 0;
  for (const auto& s : spec.sectors) n += s.count;
  return n;
}

H1Class swap_difference(const DiskSwapRecord& rec) {
  validate(rec);
  return H1Class{rec.dual_arc.space, Rat(2 - rec.suture_intersections) * rec.dual_arc.coords};
}

H1Class swap_disk_orientation(const H1Class& e, const DiskSwapRecord& rec) {
  if (e.space != rec.dual_arc.space || e.rank() != rec.dual_arc.rank()) {
    throw ContractViolation("swap_disk_orientation: Euler class and dual arc live in different spaces");
  }
  return H1Class{e.space, e.coords - swap_difference(rec).coords};
}

}  // namespace thurstonkit
