#pragma once

#include <vector>

#include "minorb/rootsys.hpp"

namespace testing {

/// Every simple type with rank <= max_rank, each listed once after canonicalization.
inline std::vector<minorb::SimpleType> types_up_to(int max_rank) {
  using minorb::Family;
  using minorb::SimpleType;
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::B, n);
  for (int n = 3; n <= max_rank; ++n) out.emplace_back(Family::C, n);
  for (int n = 4; n <= max_rank; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8 && n <= max_rank; ++n) out.emplace_back(Family::E, n);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  if (max_rank >= 2) out.emplace_back(Family::G, 2);
  return out;
}

inline minorb::SimpleType T(const char* label) { return minorb::SimpleType::parse(label); }

}  // namespace testing
