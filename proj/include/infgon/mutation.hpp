#pragma once

// Cluster mutation as the flip of an arc inside its quadrangle.

#include <set>

#include "infgon/arcs.hpp"

namespace infgon {

struct ExchangeSides {
  std::set<Arc> inner;  ///< arc sides of the face below the mutated arc
  std::set<Arc> outer;  ///< arc sides of the face above it

  bool operator==(const ExchangeSides&) const = default;
};

/// The other diagonal of the quadrangle around `a`. Throws NotMemberError
/// or NotMutableError.
Arc exchange_arc(const ArcFamily& f, Arc a);

/// (f minus a) plus exchange_arc(f, a). A single-arc orbit for `a` is replaced
/// in place; arcs inside longer orbits go through the removal set. Flipping
/// back gives the same canonical document.
ArcFamily mutate(const ArcFamily& f, Arc a);

ExchangeSides exchange_sides(const ArcFamily& f, Arc a);

}  // namespace infgon
