#pragma once

// Morphisms between indecomposable objects, read off the coordinates of the
// ZA_infinity Auslander-Reiten quiver.
//
// The object (m, n) is Sigma^{-n} X_{n-m-2}. Suspension and AR translation
// both act as (m, n) -> (m - 1, n - 1); the Serre functor is Sigma^2. Every
// Hom space is either 0 or one-dimensional; only the dimension is modeled.

#include <compare>
#include <string>

#include "infgon/arcs.hpp"

namespace infgon {

/// Indecomposable object at AR-quiver coordinate (m, n), m <= n - 2.
struct Ind {
  Int m = 0;
  Int n = 0;

  constexpr bool valid() const { return m <= n - 2; }
  /// r in X_r
  constexpr Int width() const { return n - m - 2; }
  constexpr auto operator<=>(const Ind&) const = default;
};

/// Checked construction; throws InvalidArcError.
Ind make_ind(Int m, Int n);

constexpr Arc to_arc(Ind x) { return {x.m, x.n}; }
constexpr Ind to_ind(Arc a) { return {a.left, a.right}; }

std::string to_string(Ind x);

/// Sigma^t applied to x.
constexpr Ind shift(Ind x, Int t) { return {x.m - t, x.n - t}; }
constexpr Ind suspend(Ind x) { return shift(x, 1); }
constexpr Ind serre(Ind x) { return shift(x, 2); }
constexpr Ind serre_inverse(Ind x) { return shift(x, -2); }

/// Coordinates of Sigma^j X_r; throws std::invalid_argument for r < 0.
Ind object_label(Int j, Int r);

enum class HammockSide { Minus, Plus };

struct Hammock {
  Ind apex;
  HammockSide side = HammockSide::Plus;
};

/// Membership in H^-(apex) or H^+(apex), edges included.
bool hammock_contains(const Hammock& h, Ind y);

/// y in H^-(x) or H^+(x).
bool in_hammocks(Ind x, Ind y);

/// dim Hom(x, y) from the hammock regions of Sigma x.
int hom_dim(Ind x, Ind y);

/// dim Hom(x, y) from whether the arcs of x and Sigma^{-1} y cross; never
/// consults the hammock regions.
int hom_dim_via_arcs(Ind x, Ind y);

enum class MorphismKind { Zero, Forward, Backward };

MorphismKind morphism_kind(Ind x, Ind y);
std::string to_string(MorphismKind k);

enum class Composition { NonZero, Undetermined };

/// Whether nonzero x -> y -> z compose to something nonzero, decided only for
/// all-forward chains. Throws PreconditionError unless Hom(x,y) and Hom(y,z)
/// are both nonzero.
Composition composition_nonzero(Ind x, Ind y, Ind z);
std::string to_string(Composition c);

}  // namespace infgon
