#pragma once

// Maximality and functorial finiteness of arc families.
//
// A family is a triangulation of the infinity-gon when it is a maximal set
// of pairwise non-crossing arcs. Maximality is checked exactly on a finite
// window; for the supported infinite shapes (unit rays, unit nested orbits,
// finitely many extra arcs) it is also certified globally.

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "infgon/arcs.hpp"
#include "infgon/homcalc.hpp"

namespace infgon {

struct Maximal {
  bool operator==(const Maximal&) const = default;
};
struct Missing {
  Arc witness;
  bool operator==(const Missing&) const = default;
};
struct Crossing {
  Arc first;
  Arc second;
  bool operator==(const Crossing&) const = default;
};
using MaximalityVerdict = std::variant<Maximal, Missing, Crossing>;

/// Every non-member candidate inside `w` is crossed by some member (members
/// may reach outside `w`). Witnesses follow scan order. Throws
/// PreconditionError if the family fails validation for a reason other than
/// crossing arcs.
MaximalityVerdict is_window_maximal(const ArcFamily& f, Window w);

struct Certified {
  Window window;
  bool operator==(const Certified&) const = default;
};
struct Refuted {
  Arc witness;
  bool operator==(const Refuted&) const = default;
};
struct Unknown {
  std::string reason;
  bool operator==(const Unknown&) const = default;
};
using GlobalCertificate = std::variant<Certified, Refuted, Unknown>;

/// Half-width B of the certification window [-B, B].
Int certification_bound(const ArcFamily& f);

/// Exact global maximality for families whose infinite orbits are unit rays
/// or unit nested orbits; Unknown for any other infinite shape. Refuted
/// carries the scan-order-first uncovered candidate on the whole line.
GlobalCertificate certify_global_maximal(const ArcFamily& f);

std::string describe(const MaximalityVerdict& v);
std::string describe(const GlobalCertificate& c);

/// Coordinates x in `w` with Hom(Sigma^{-1} a, x) = 0 for every member a.
/// Goes through hom_dim only.
std::set<Ind> perp_window(const ArcFamily& f, Window w);

enum class FFReason { LocallyFinite, Fountain, SplitFountains };

struct FFVerdict {
  bool functorially_finite = false;
  FFReason reason = FFReason::LocallyFinite;
  std::optional<Int> left_fountain;
  std::optional<Int> right_fountain;

  bool operator==(const FFVerdict&) const = default;
};

std::string to_string(FFReason r);

/// Throws PreconditionError unless the family is certified maximal.
FFVerdict functorially_finite(const ArcFamily& f);

struct Triangle {
  Int v0 = 0;
  Int v1 = 0;
  Int v2 = 0;
  auto operator<=>(const Triangle&) const = default;
};

/// Faces inside `w`: triples whose three sides are members or boundary
/// edges, ordered by their long side (v2, then v0).
std::vector<Triangle> triangles_in_window(const ArcFamily& f, Window w);

struct Quadrilateral {
  Int inner_apex = 0;
  std::optional<Int> outer_apex;
  bool operator==(const Quadrilateral&) const = default;
};

/// The two faces on either side of member `a`. Throws NotMemberError, or
/// PreconditionError when the inner face is not a triangle.
Quadrilateral quadrilateral(const ArcFamily& f, Arc a);

}  // namespace infgon
