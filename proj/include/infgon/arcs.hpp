#pragma once

// Arcs of the infinity-gon and finitely described (possibly infinite)
// families of them.
//
// An arc (m, n) joins two non-neighbouring integers, m <= n - 2. Infinite
// families are written as a finite list of orbits (m + k*dl, n + k*dr),
// 0 <= k < count, minus a finite set of removed arcs. Every predicate below
// is decided exactly over that representation.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "infgon/lattice.hpp"

namespace infgon {

using Int = std::int64_t;

struct Arc {
  Int left = 0;
  Int right = 0;

  constexpr bool valid() const { return left <= right - 2; }
  constexpr auto operator<=>(const Arc&) const = default;
};

/// Checked construction; throws InvalidArcError.
Arc make_arc(Int left, Int right);

constexpr Arc translate(Arc a, Int t) { return {a.left + t, a.right + t}; }

std::string to_string(Arc a);

/// Deterministic witness order: (|left| + |right|, left, right).
bool scan_less(const Arc& a, const Arc& b);

/// Finite viewport [lo, hi] on the integers.
struct Window {
  Int lo = 0;
  Int hi = 0;

  constexpr bool contains(Int v) const { return lo <= v && v <= hi; }
  constexpr bool contains(Arc a) const { return contains(a.left) && contains(a.right); }
  constexpr bool operator==(const Window&) const = default;
};

/// Checked construction; throws std::invalid_argument when lo > hi.
Window make_window(Int lo, Int hi);

/// Every valid arc with both endpoints in `w`, in scan order.
std::vector<Arc> window_candidates(Window w);

/// Linear family a_k = (m + k*dl, n + k*dr), 0 <= k < count.
struct Orbit {
  Arc base;
  Int step_left = 0;
  Int step_right = 0;
  std::optional<Int> count;  ///< absent: infinite

  static Orbit single(Arc a) { return {a, 0, 0, 1}; }
  static Orbit infinite(Arc a, Int dl, Int dr) { return {a, dl, dr, std::nullopt}; }

  bool is_infinite() const { return !count.has_value(); }
  bool is_single() const { return count && *count == 1; }
  Arc at(Int k) const { return {base.left + k * step_left, base.right + k * step_right}; }

  /// Index range [0, count - 1].
  lattice::Range indices() const;

  /// The k with at(k) == a, if any (ignores removals).
  std::optional<Int> index_of(Arc a) const;

  bool operator==(const Orbit&) const = default;
};

struct ArcFamily {
  std::vector<Orbit> orbits;
  std::set<Arc> removed;

  bool operator==(const ArcFamily&) const = default;
};

ArcFamily translate(const ArcFamily& f, Int t);

/// A maximal run of an orbit's indices that contains no removed arc.
struct Segment {
  std::size_t orbit = 0;
  lattice::Range k;
};

/// The member set of `f` split into removal-free index runs, in orbit order.
std::vector<Segment> member_segments(const ArcFamily& f);

bool crosses(Arc a, Arc b);

/// Throws InvalidArcError when `a` is not an arc.
bool family_contains(const ArcFamily& f, Arc a);

/// Member or boundary edge (i, i + 1).
bool family_has_side(const ArcFamily& f, Int u, Int v);

/// Member arcs inside `w`, lexicographically sorted and deduplicated.
std::vector<Arc> arcs_in_window(const ArcFamily& f, Window w);

/// Some member crossing `a` (first by orbit order, then by index), if any.
std::optional<Arc> crossing_member(const ArcFamily& f, Arc a);

/// Member or crossed by a member.
bool is_covered(const ArcFamily& f, Arc a);

/// max { l < below : (l, right) is a member }.
std::optional<Int> max_left_partner(const ArcFamily& f, Int right, Int below);

/// min { r > above : (left, r) is a member }.
std::optional<Int> min_right_partner(const ArcFamily& f, Int left, Int above);

// Validation verdicts.
struct Valid {
  bool operator==(const Valid&) const = default;
};
struct MalformedOrbit {
  std::size_t orbit;
  std::string reason;
  bool operator==(const MalformedOrbit&) const = default;
};
struct InvalidArc {
  std::size_t orbit;
  Int k;
  bool operator==(const InvalidArc&) const = default;
};
struct StrayRemoval {
  Arc arc;
  bool operator==(const StrayRemoval&) const = default;
};
struct SelfCrossing {
  Arc first;
  Arc second;
  bool operator==(const SelfCrossing&) const = default;
};
using Validation = std::variant<Valid, MalformedOrbit, InvalidArc, StrayRemoval, SelfCrossing>;

Validation validate_family(const ArcFamily& f);
std::string describe(const Validation& v);

/// Throws PreconditionError carrying describe(v) unless `f` validates.
void require_valid(const ArcFamily& f);

struct Classification {
  bool locally_finite = true;
  std::set<Int> left_fountains;
  std::set<Int> right_fountains;
  std::set<Int> fountains;

  bool operator==(const Classification&) const = default;
};

Classification classify(const ArcFamily& f);

namespace canonical {
/// Fountain at 0.
ArcFamily fountain();
/// Nested zigzag (-k, k), (-k-1, k).
ArcFamily leapfrog();
/// Left fountain at 0 next to a right fountain at 1.
ArcFamily split();
}  // namespace canonical

}  // namespace infgon
