#pragma once

#include <cstdint>
#include <vector>

#include "basicfn/weight.hpp"

namespace basicfn {

/// Pointed rational polyhedral cone in Z^rank, stored by its extremal
/// rays and by an inequality description: x is a member iff every
/// equation vanishes on x and every facet functional is >= 0 on x.
struct SupportCone {
  std::size_t rank = 0;
  std::vector<Weight> rays;
  std::vector<std::vector<std::int64_t>> equations;
  std::vector<std::vector<std::int64_t>> facets;

  std::size_t dimension() const noexcept { return rank - equations.size(); }
  bool contains(const Weight& x) const;
};

/// Cone spanned by the generators (and 0). Throws NotStronglyConvex when
/// the cone contains a line.
SupportCone cone_from_generators(const std::vector<Weight>& generators, std::size_t rank);

}  // namespace basicfn
