#include "infgon/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace infgon::lattice {

namespace {

__extension__ typedef __int128 Wide;

// Longer scans throw std::length_error.
constexpr Int kScanLimit = 100'000'000;

// A bound on y of the form (p*x + q) / d with d > 0.
struct Line {
  Int p;
  Int q;
  Int d;
};

Int wide_floor_div(Wide num, Wide den) {
  Wide q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return static_cast<Int>(q);
}

Int wide_ceil_div(Wide num, Wide den) {
  Wide q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return static_cast<Int>(q);
}

Int lower_at(const Line& l, Int x) {
  return wide_ceil_div(Wide(l.p) * x + l.q, l.d);
}

Int upper_at(const Line& l, Int x) {
  return wide_floor_div(Wide(l.p) * x + l.q, l.d);
}

}  // namespace

Int floor_div(Int num, Int den) {
  if (den == 0) throw std::domain_error("floor_div by zero");
  return wide_floor_div(num, den);
}

Int ceil_div(Int num, Int den) {
  if (den == 0) throw std::domain_error("ceil_div by zero");
  return wide_ceil_div(num, den);
}

std::optional<Range> solve_1d(std::span<const Constraint> cs, Range x) {
  for (const auto& c : cs) {
    if (c.b != 0) throw std::invalid_argument("solve_1d: constraint depends on y");
    if (c.a == 0) {
      if (c.c < 0) return std::nullopt;
    } else if (c.a > 0) {
      x.lo = std::max(x.lo, ceil_div(-c.c, c.a));
    } else {
      Int hi = floor_div(c.c, -c.a);
      x.hi = x.hi ? std::min(*x.hi, hi) : hi;
    }
  }
  if (x.empty()) return std::nullopt;
  return x;
}

std::optional<std::pair<Int, Int>> first_point(std::span<const Constraint> cs,
                                               Range x, Range y) {
  if (x.empty() || y.empty()) return std::nullopt;

  std::vector<Constraint> pure;
  std::vector<Line> lowers{{0, y.lo, 1}};
  std::vector<Line> uppers;
  if (y.hi) uppers.push_back({0, *y.hi, 1});
  for (const auto& c : cs) {
    if (c.b == 0)
      pure.push_back(c);
    else if (c.b > 0)
      lowers.push_back({-c.a, -c.c, c.b});
    else
      uppers.push_back({c.a, c.c, -c.b});
  }

  auto xr = solve_1d(pure, x);
  if (!xr) return std::nullopt;
  x = *xr;

  // No upper bound on y: every admissible x works.
  if (uppers.empty()) {
    Int lo = y.lo;
    for (const auto& l : lowers) lo = std::max(lo, lower_at(l, x.lo));
    return std::pair{x.lo, lo};
  }

  // Find where the y-interval settles into its asymptotic regime.
  Int threshold = x.lo;
  Int period = 1;
  std::optional<Int> dead_from;
  for (const auto& lo : lowers) {
    for (const auto& up : uppers) {
      Wide slope = Wide(up.p) * lo.d - Wide(lo.p) * up.d;
      Wide icpt = Wide(up.q) * lo.d - Wide(lo.q) * up.d;
      Wide den = Wide(lo.d) * up.d;
      if (slope > 0) {
        // gap >= 1 from here on, so an integer fits between the two lines
        threshold = std::max(threshold, wide_ceil_div(den - icpt, slope));
      } else if (slope < 0) {
        // gap < 0 from here on
        Int t = wide_floor_div(-icpt, slope) + 1;
        dead_from = dead_from ? std::min(*dead_from, t) : t;
      } else {
        period = std::lcm(period, static_cast<Int>(den));
      }
    }
  }

  Int end = dead_from ? *dead_from - 1 : threshold + period - 1;
  if (x.hi) end = std::min(end, *x.hi);
  if (end - x.lo > kScanLimit)
    throw std::length_error("lattice scan range too large");

  for (Int xv = x.lo; xv <= end; ++xv) {
    Int lo = lower_at(lowers.front(), xv);
    for (const auto& l : lowers) lo = std::max(lo, lower_at(l, xv));
    Int hi = upper_at(uppers.front(), xv);
    for (const auto& u : uppers) hi = std::min(hi, upper_at(u, xv));
    if (lo <= hi) return std::pair{xv, lo};
  }
  return std::nullopt;
}

}  // namespace infgon::lattice
