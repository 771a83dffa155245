#include "infgon/homcalc.hpp"

#include <stdexcept>

#include "infgon/errors.hpp"

namespace infgon {

Ind make_ind(Int m, Int n) {
  Ind x{m, n};
  if (!x.valid())
    throw InvalidArcError("(" + std::to_string(m) + "," + std::to_string(n) +
                          ") is not a coordinate of the AR quiver");
  return x;
}

std::string to_string(Ind x) { return to_string(to_arc(x)); }

Ind object_label(Int j, Int r) {
  if (r < 0) throw std::invalid_argument("object_label: r must be non-negative");
  return {-j - r - 2, -j};
}

bool hammock_contains(const Hammock& h, Ind y) {
  const Int i = h.apex.m, j = h.apex.n;
  if (h.side == HammockSide::Minus)
    return y.m <= i - 1 && i + 1 <= y.n && y.n <= j - 1;
  return i + 1 <= y.m && y.m <= j - 1 && j + 1 <= y.n;
}

bool in_hammocks(Ind x, Ind y) {
  return hammock_contains({x, HammockSide::Minus}, y) ||
         hammock_contains({x, HammockSide::Plus}, y);
}

int hom_dim(Ind x, Ind y) { return in_hammocks(suspend(x), y) ? 1 : 0; }

int hom_dim_via_arcs(Ind x, Ind y) {
  return crosses(to_arc(x), to_arc(shift(y, -1))) ? 1 : 0;
}

MorphismKind morphism_kind(Ind x, Ind y) {
  const Ind sx = suspend(x);
  if (hammock_contains({sx, HammockSide::Plus}, y)) return MorphismKind::Forward;
  if (hammock_contains({sx, HammockSide::Minus}, y)) return MorphismKind::Backward;
  return MorphismKind::Zero;
}

std::string to_string(MorphismKind k) {
  switch (k) {
    case MorphismKind::Forward: return "forward";
    case MorphismKind::Backward: return "backward";
    case MorphismKind::Zero: break;
  }
  return "zero";
}

Composition composition_nonzero(Ind x, Ind y, Ind z) {
  if (hom_dim(x, y) == 0 || hom_dim(y, z) == 0)
    throw PreconditionError("composition_nonzero needs Hom(x,y) and Hom(y,z) nonzero");
  const bool forward_chain = hammock_contains({suspend(x), HammockSide::Plus}, y) &&
                             hammock_contains({suspend(x), HammockSide::Plus}, z) &&
                             hammock_contains({suspend(y), HammockSide::Plus}, z);
  return forward_chain ? Composition::NonZero : Composition::Undetermined;
}

std::string to_string(Composition c) {
  return c == Composition::NonZero ? "nonzero" : "undetermined";
}

}  // namespace infgon
