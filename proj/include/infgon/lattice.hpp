#pragma once

// Exact integer feasibility for tiny linear systems in one or two variables.
//
// Every pairwise predicate on orbit families (crossing, membership, endpoint
// queries) reduces to a handful of inequalities `a*x + b*y + c >= 0` over
// bounded or half-infinite integer ranges. Everything here is integer
// arithmetic; no floating point is involved.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

namespace infgon::lattice {

using Int = std::int64_t;

/// a*x + b*y + c >= 0
struct Constraint {
  Int a = 0;
  Int b = 0;
  Int c = 0;
};

/// Strict form a*x + b*y + c > 0, which over the integers is a*x + b*y + c - 1 >= 0.
constexpr Constraint strictly(Int a, Int b, Int c) { return {a, b, c - 1}; }

/// Closed integer range [lo, hi]; `hi` absent means unbounded above.
struct Range {
  Int lo = 0;
  std::optional<Int> hi;

  bool empty() const { return hi && *hi < lo; }
  bool contains(Int v) const { return v >= lo && (!hi || v <= *hi); }
};

Int floor_div(Int num, Int den);
Int ceil_div(Int num, Int den);

/// Solves a single-variable system (the `b` coefficients must be zero) and
/// returns the feasible subrange of `x`, or nullopt when it is empty.
std::optional<Range> solve_1d(std::span<const Constraint> cs, Range x);

/// Lexicographically smallest integer point (x, y) with x in `x`, y in `y`
/// satisfying every constraint, or nullopt if the system is infeasible.
///
/// Decides unbounded ranges exactly: beyond a computable threshold the
/// y-interval for a given x either shrinks to nothing, contains an integer
/// for every x, or varies periodically in x, so a finite scan suffices.
std::optional<std::pair<Int, Int>> first_point(std::span<const Constraint> cs,
                                               Range x, Range y);

}  // namespace infgon::lattice
