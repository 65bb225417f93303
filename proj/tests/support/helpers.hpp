#pragma once

#include <set>
#include <vector>

#include "thurstonkit/rational.hpp"

namespace testing {

using thurstonkit::Rat;
using thurstonkit::RatVec;

inline Rat q(std::int64_t n, std::int64_t d = 1) { return Rat(n, d); }

inline std::set<RatVec> as_set(const std::vector<RatVec>& vs) { return {vs.begin(), vs.end()}; }

// {v, -v} for each v.
inline std::set<RatVec> pm(std::initializer_list<RatVec> vs) {
  std::set<RatVec> out;
  for (const auto& v : vs) {
    out.insert(v);
    out.insert(-v);
  }
  return out;
}

}  // namespace testing
