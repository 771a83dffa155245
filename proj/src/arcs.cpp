#include "infgon/arcs.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>
#include <iterator>
#include <stdexcept>
#include <tuple>

#include "infgon/errors.hpp"

namespace infgon {

using lattice::Constraint;
using lattice::Range;
using lattice::strictly;

Arc make_arc(Int left, Int right) {
  Arc a{left, right};
  if (!a.valid())
    throw InvalidArcError("(" + std::to_string(left) + "," + std::to_string(right) +
                          ") violates m <= n - 2");
  return a;
}

std::string to_string(Arc a) {
  return "(" + std::to_string(a.left) + "," + std::to_string(a.right) + ")";
}

bool scan_less(const Arc& a, const Arc& b) {
  auto key = [](const Arc& x) {
    return std::tuple{std::abs(x.left) + std::abs(x.right), x.left, x.right};
  };
  return key(a) < key(b);
}

Window make_window(Int lo, Int hi) {
  if (lo > hi)
    throw std::invalid_argument("window [" + std::to_string(lo) + "," +
                                std::to_string(hi) + "] has lo > hi");
  return {lo, hi};
}

std::vector<Arc> window_candidates(Window w) {
  std::vector<Arc> out;
  for (Int l = w.lo; l <= w.hi; ++l)
    for (Int r = l + 2; r <= w.hi; ++r) out.push_back({l, r});
  std::sort(out.begin(), out.end(), scan_less);
  return out;
}

Range Orbit::indices() const {
  if (count) return {0, *count - 1};
  return {0, std::nullopt};
}

namespace {

// Constraints pinning orbit index k to produce `a`.
std::array<Constraint, 4> equals_arc(const Orbit& o, Arc a) {
  return {{{o.step_left, 0, o.base.left - a.left},
           {-o.step_left, 0, a.left - o.base.left},
           {o.step_right, 0, o.base.right - a.right},
           {-o.step_right, 0, a.right - o.base.right}}};
}

}  // namespace

std::optional<Int> Orbit::index_of(Arc a) const {
  auto cs = equals_arc(*this, a);
  auto r = lattice::solve_1d(cs, indices());
  if (!r) return std::nullopt;
  return r->lo;
}

ArcFamily translate(const ArcFamily& f, Int t) {
  ArcFamily out;
  for (auto o : f.orbits) {
    o.base = translate(o.base, t);
    out.orbits.push_back(o);
  }
  for (auto a : f.removed) out.removed.insert(translate(a, t));
  return out;
}

std::vector<Segment> member_segments(const ArcFamily& f) {
  std::vector<Segment> out;
  for (std::size_t i = 0; i < f.orbits.size(); ++i) {
    const auto& o = f.orbits[i];
    std::vector<Int> cut;
    for (const auto& a : f.removed)
      if (auto k = o.index_of(a)) cut.push_back(*k);
    std::sort(cut.begin(), cut.end());
    cut.erase(std::unique(cut.begin(), cut.end()), cut.end());

    Range rest = o.indices();
    for (Int k : cut) {
      if (k > rest.lo) out.push_back({i, {rest.lo, k - 1}});
      rest.lo = k + 1;
    }
    if (!rest.empty()) out.push_back({i, rest});
  }
  return out;
}

bool crosses(Arc a, Arc b) {
  return (a.left < b.left && b.left < a.right && a.right < b.right) ||
         (b.left < a.left && a.left < b.right && b.right < a.right);
}

namespace {

// Lexicographically first (x, y) such that A.at(x) and B.at(y) cross.
std::optional<std::pair<Int, Int>> first_cross(const Orbit& A, Range ka, const Orbit& B,
                                               Range kb, bool ordered) {
  const Int a = A.base.left, p = A.step_left, b = A.base.right, q = A.step_right;
  const Int c = B.base.left, r = B.step_left, d = B.base.right, s = B.step_right;

  // A.left < B.left < A.right < B.right
  std::vector<Constraint> inner_right{strictly(-p, r, c - a), strictly(q, -r, b - c),
                                      strictly(-q, s, d - b)};
  // B.left < A.left < B.right < A.right
  std::vector<Constraint> inner_left{strictly(p, -r, a - c), strictly(-p, s, d - a),
                                     strictly(q, -s, b - d)};
  if (ordered) {
    inner_right.push_back(strictly(-1, 1, 0));
    inner_left.push_back(strictly(-1, 1, 0));
  }
  auto one = lattice::first_point(inner_right, ka, kb);
  auto two = lattice::first_point(inner_left, ka, kb);
  if (one && two) return std::min(*one, *two);
  return one ? one : two;
}

void require_arc(Arc a) {
  if (!a.valid()) throw InvalidArcError(to_string(a) + " violates m <= n - 2");
}

}  // namespace

bool family_contains(const ArcFamily& f, Arc a) {
  require_arc(a);
  if (f.removed.contains(a)) return false;
  return std::any_of(f.orbits.begin(), f.orbits.end(),
                     [&](const Orbit& o) { return o.index_of(a).has_value(); });
}

bool family_has_side(const ArcFamily& f, Int u, Int v) {
  if (u > v) std::swap(u, v);
  if (v - u == 1) return true;
  if (v - u < 1) return false;
  return family_contains(f, {u, v});
}

std::vector<Arc> arcs_in_window(const ArcFamily& f, Window w) {
  std::set<Arc> found;
  for (const auto& seg : member_segments(f)) {
    const auto& o = f.orbits[seg.orbit];
    std::array<Constraint, 4> cs{{{o.step_left, 0, o.base.left - w.lo},
                                  {-o.step_left, 0, w.hi - o.base.left},
                                  {o.step_right, 0, o.base.right - w.lo},
                                  {-o.step_right, 0, w.hi - o.base.right}}};
    auto r = lattice::solve_1d(cs, seg.k);
    if (!r) continue;
    if (!r->hi) {
      // zero steps: one arc
      found.insert(o.at(r->lo));
      continue;
    }
    for (Int k = r->lo; k <= *r->hi; ++k) found.insert(o.at(k));
  }
  return {found.begin(), found.end()};
}

std::optional<Arc> crossing_member(const ArcFamily& f, Arc a) {
  require_arc(a);
  const Orbit probe = Orbit::single(a);
  for (const auto& seg : member_segments(f)) {
    const auto& o = f.orbits[seg.orbit];
    if (auto hit = first_cross(o, seg.k, probe, {0, 0}, false)) return o.at(hit->first);
  }
  return std::nullopt;
}

bool is_covered(const ArcFamily& f, Arc a) {
  return family_contains(f, a) || crossing_member(f, a).has_value();
}

std::optional<Int> max_left_partner(const ArcFamily& f, Int right, Int below) {
  std::optional<Int> best;
  for (const auto& seg : member_segments(f)) {
    const auto& o = f.orbits[seg.orbit];
    std::array<Constraint, 3> cs{{{o.step_right, 0, o.base.right - right},
                                  {-o.step_right, 0, right - o.base.right},
                                  {-o.step_left, 0, below - 1 - o.base.left}}};
    auto r = lattice::solve_1d(cs, seg.k);
    if (!r) continue;
    Int k = (o.step_left > 0 && r->hi) ? *r->hi : r->lo;
    Int l = o.at(k).left;
    if (!best || l > *best) best = l;
  }
  return best;
}

std::optional<Int> min_right_partner(const ArcFamily& f, Int left, Int above) {
  std::optional<Int> best;
  for (const auto& seg : member_segments(f)) {
    const auto& o = f.orbits[seg.orbit];
    std::array<Constraint, 3> cs{{{o.step_left, 0, o.base.left - left},
                                  {-o.step_left, 0, left - o.base.left},
                                  {o.step_right, 0, o.base.right - above - 1}}};
    auto r = lattice::solve_1d(cs, seg.k);
    if (!r) continue;
    Int k = (o.step_right < 0 && r->hi) ? *r->hi : r->lo;
    Int v = o.at(k).right;
    if (!best || v < *best) best = v;
  }
  return best;
}

Validation validate_family(const ArcFamily& f) {
  for (std::size_t i = 0; i < f.orbits.size(); ++i) {
    const auto& o = f.orbits[i];
    if (o.count && *o.count < 1) return MalformedOrbit{i, "count must be positive"};
    if (!o.is_single() && o.step_left == 0 && o.step_right == 0)
      return MalformedOrbit{i, "zero steps require count 1"};
    if (!o.base.valid()) return InvalidArc{i, 0};
    if (o.is_single()) continue;
    Int shrink = o.step_left - o.step_right;
    if (shrink > 0) {
      // width(k) = (n - m) - k*shrink drops below 2 at this k
      Int k = lattice::ceil_div(o.base.right - o.base.left - 1, shrink);
      if (!o.count || k <= *o.count - 1) return InvalidArc{i, k};
    }
  }

  for (const auto& a : f.removed) {
    bool generated = std::any_of(f.orbits.begin(), f.orbits.end(),
                                 [&](const Orbit& o) { return o.index_of(a).has_value(); });
    if (!generated) return StrayRemoval{a};
  }

  auto segs = member_segments(f);
  for (std::size_t i = 0; i < f.orbits.size(); ++i) {
    for (std::size_t j = i; j < f.orbits.size(); ++j) {
      std::optional<std::pair<Int, Int>> best;
      for (std::size_t s = 0; s < segs.size(); ++s) {
        if (segs[s].orbit != i) continue;
        for (std::size_t t = (i == j ? s : 0); t < segs.size(); ++t) {
          if (segs[t].orbit != j) continue;
          auto hit = first_cross(f.orbits[i], segs[s].k, f.orbits[j], segs[t].k, s == t);
          if (hit && (!best || *hit < *best)) best = hit;
        }
      }
      if (best) {
        Arc x = f.orbits[i].at(best->first);
        Arc y = f.orbits[j].at(best->second);
        if (i == j && best->second < best->first) std::swap(x, y);
        return SelfCrossing{x, y};
      }
    }
  }
  return Valid{};
}

std::string describe(const Validation& v) {
  std::ostringstream os;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Valid>)
          os << "valid";
        else if constexpr (std::is_same_v<T, MalformedOrbit>)
          os << "orbit " << x.orbit << " is malformed: " << x.reason;
        else if constexpr (std::is_same_v<T, InvalidArc>)
          os << "orbit " << x.orbit << " generates an invalid arc at k = " << x.k;
        else if constexpr (std::is_same_v<T, StrayRemoval>)
          os << "removed arc " << to_string(x.arc) << " is not generated by any orbit";
        else
          os << "arcs " << to_string(x.first) << " and " << to_string(x.second) << " cross";
      },
      v);
  return os.str();
}

void require_valid(const ArcFamily& f) {
  auto v = validate_family(f);
  if (!std::holds_alternative<Valid>(v)) throw PreconditionError(describe(v));
}

Classification classify(const ArcFamily& f) {
  Classification c;
  for (const auto& o : f.orbits) {
    if (!o.is_infinite()) continue;
    if (o.step_left == 0 && o.step_right > 0) c.right_fountains.insert(o.base.left);
    if (o.step_right == 0 && o.step_left < 0) c.left_fountains.insert(o.base.right);
  }
  std::set_intersection(c.left_fountains.begin(), c.left_fountains.end(),
                        c.right_fountains.begin(), c.right_fountains.end(),
                        std::inserter(c.fountains, c.fountains.end()));
  c.locally_finite = c.left_fountains.empty() && c.right_fountains.empty();
  return c;
}

namespace canonical {

ArcFamily fountain() {
  return {{Orbit::infinite({0, 2}, 0, 1), Orbit::infinite({-2, 0}, -1, 0)}, {}};
}

ArcFamily leapfrog() {
  return {{Orbit::infinite({-1, 1}, -1, 1), Orbit::infinite({-2, 1}, -1, 1)}, {}};
}

ArcFamily split() {
  return {{Orbit::infinite({-2, 0}, -1, 0), Orbit::infinite({1, 3}, 0, 1)}, {}};
}

}  // namespace canonical

}  // namespace infgon
