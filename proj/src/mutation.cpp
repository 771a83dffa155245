#include "infgon/mutation.hpp"

#include <algorithm>
#include <optional>

#include "infgon/errors.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

namespace {

Int outer_apex_or_throw(const Quadrilateral& q, Arc a) {
  if (!q.outer_apex)
    throw NotMutableError(to_string(a) + " has no face above it, so there is no quadrangle");
  return *q.outer_apex;
}

bool generated(const ArcFamily& f, Arc a) {
  return std::any_of(f.orbits.begin(), f.orbits.end(),
                     [&](const Orbit& o) { return o.index_of(a).has_value(); });
}

void add_side(std::set<Arc>& into, Int u, Int v) {
  if (u > v) std::swap(u, v);
  if (v - u >= 2) into.insert({u, v});
}

}  // namespace

Arc exchange_arc(const ArcFamily& f, Arc a) {
  const auto q = quadrilateral(f, a);
  const Int outer = outer_apex_or_throw(q, a);
  return {std::min(q.inner_apex, outer), std::max(q.inner_apex, outer)};
}

ArcFamily mutate(const ArcFamily& f, Arc a) {
  const Arc star = exchange_arc(f, a);

  ArcFamily out = f;
  auto slot = std::find_if(out.orbits.begin(), out.orbits.end(),
                           [&](const Orbit& o) { return o.is_single() && o.base == a; });
  std::optional<std::size_t> freed;
  if (slot != out.orbits.end()) {
    freed = static_cast<std::size_t>(slot - out.orbits.begin());
    std::erase_if(out.orbits, [&](const Orbit& o) { return o.is_single() && o.base == a; });
  }
  if (generated(out, a)) out.removed.insert(a);

  if (out.removed.contains(star)) {
    out.removed.erase(star);
  } else if (!generated(out, star)) {
    auto at = freed ? out.orbits.begin() + static_cast<std::ptrdiff_t>(*freed) : out.orbits.end();
    out.orbits.insert(at, Orbit::single(star));
  }
  return out;
}

ExchangeSides exchange_sides(const ArcFamily& f, Arc a) {
  const auto q = quadrilateral(f, a);
  const Int outer = outer_apex_or_throw(q, a);
  ExchangeSides s;
  add_side(s.inner, a.left, q.inner_apex);
  add_side(s.inner, q.inner_apex, a.right);
  add_side(s.outer, outer, a.left);
  add_side(s.outer, outer, a.right);
  return s;
}

}  // namespace infgon
