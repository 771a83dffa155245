#include "infgon/triangulation.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "infgon/errors.hpp"

namespace infgon {

namespace {

// Candidates with |left| + |right| == s, in scan order.
std::vector<Arc> candidates_with_sum(Int s) {
  std::vector<Arc> out;
  for (Int l = -s; l <= s; ++l) {
    Int rest = s - std::abs(l);
    for (Int r : {-rest, rest}) {
      if (r >= l + 2 && (out.empty() || out.back() != Arc{l, r})) out.push_back({l, r});
    }
  }
  return out;
}

std::optional<Arc> first_uncovered_up_to(const ArcFamily& f, Int max_sum) {
  for (Int s = 0; s <= max_sum; ++s)
    for (const auto& c : candidates_with_sum(s))
      if (!is_covered(f, c)) return c;
  return std::nullopt;
}

Int sum_of(Arc a) { return std::abs(a.left) + std::abs(a.right); }

enum class Shape { RightRay, LeftRay, Nested, Other };

Shape shape_of(const Orbit& o) {
  if (o.step_left == 0 && o.step_right == 1) return Shape::RightRay;
  if (o.step_left == -1 && o.step_right == 0) return Shape::LeftRay;
  if (o.step_left == -1 && o.step_right == 1) return Shape::Nested;
  return Shape::Other;
}

}  // namespace

MaximalityVerdict is_window_maximal(const ArcFamily& f, Window w) {
  auto v = validate_family(f);
  if (auto* x = std::get_if<SelfCrossing>(&v)) return Crossing{x->first, x->second};
  if (!std::holds_alternative<Valid>(v)) throw PreconditionError(describe(v));
  for (const auto& c : window_candidates(w))
    if (!is_covered(f, c)) return Missing{c};
  return Maximal{};
}

Int certification_bound(const ArcFamily& f) {
  Int reach = 0;
  Int step = 0;
  auto see = [&](Arc a) { reach = std::max({reach, std::abs(a.left), std::abs(a.right)}); };
  for (const auto& o : f.orbits) {
    see(o.base);
    if (o.is_single()) continue;
    step = std::max({step, std::abs(o.step_left), std::abs(o.step_right)});
    if (o.count) see(o.at(*o.count - 1));
  }
  for (const auto& a : f.removed) see(a);
  return reach + 2 * step + 4;
}

GlobalCertificate certify_global_maximal(const ArcFamily& f) {
  require_valid(f);

  bool right_ray = false, left_ray = false;
  std::vector<Int> nested_sums;
  for (const auto& o : f.orbits) {
    if (!o.is_infinite()) continue;
    switch (shape_of(o)) {
      case Shape::RightRay: right_ray = true; break;
      case Shape::LeftRay: left_ray = true; break;
      case Shape::Nested: nested_sums.push_back(o.base.left + o.base.right); break;
      case Shape::Other:
        return Unknown{"orbit " + to_string(o.base) + " with steps (" +
                       std::to_string(o.step_left) + "," + std::to_string(o.step_right) +
                       ") has no tail rule"};
    }
  }

  const Int B = certification_bound(f);
  const Window w{-B, B};

  // Sum of the cheapest uncovered candidate known so far.
  std::optional<Int> witness_sum;
  auto note = [&](Arc c) {
    Int s = sum_of(c);
    if (!witness_sum || s < *witness_sum) witness_sum = s;
  };

  const auto inside_verdict = is_window_maximal(f, w);
  if (auto* m = std::get_if<Missing>(&inside_verdict)) note(m->witness);

  const bool nested = !nested_sums.empty();

  // Both endpoints right of the window.
  if (!right_ray && !nested) note({B + 1, B + 3});
  // Both endpoints left of the window.
  if (!left_ray && !nested) note({-B - 3, -B - 1});
  // Straddling the whole window: a nested orbit of sum s misses exactly the
  // candidates with left + right = s +- 1.
  if (!right_ray && !left_ray) {
    std::optional<Int> gap;
    if (!nested) {
      gap = 0;
    } else {
      for (Int d : {-1, 1}) {
        Int s = nested_sums.front() + d;
        bool everywhere = std::all_of(nested_sums.begin(), nested_sums.end(),
                                      [&](Int t) { return s == t - 1 || s == t + 1; });
        if (everywhere && (!gap || std::abs(s) < std::abs(*gap))) gap = s;
      }
    }
    if (gap) note(*gap >= 0 ? Arc{-B - 1, *gap + B + 1} : Arc{*gap - B - 1, B + 1});
  }

  // One endpoint inside the window: scan a finite belt on each side.
  Int max_sum = nested ? *std::max_element(nested_sums.begin(), nested_sums.end()) : 0;
  Int min_sum = nested ? *std::min_element(nested_sums.begin(), nested_sums.end()) : 0;
  for (Int inside = -B; inside <= B; ++inside) {
    Int far = std::max(B + 2, nested ? max_sum + 2 - inside : B + 2);
    for (Int r = std::max(B + 1, inside + 2); r <= far; ++r) {
      if (!is_covered(f, {inside, r})) {
        note({inside, r});
        break;
      }
    }
    Int near = std::min(-B - 2, nested ? min_sum - 2 - inside : -B - 2);
    for (Int l = std::min(-B - 1, inside - 2); l >= near; --l) {
      if (!is_covered(f, {l, inside})) {
        note({l, inside});
        break;
      }
    }
  }

  if (!witness_sum) return Certified{w};
  if (auto c = first_uncovered_up_to(f, *witness_sum)) return Refuted{*c};
  return Unknown{"tail analysis predicted an uncovered arc that the exact check covers"};
}

std::string describe(const MaximalityVerdict& v) {
  if (std::holds_alternative<Maximal>(v)) return "maximal";
  if (auto* m = std::get_if<Missing>(&v)) return "missing " + to_string(m->witness);
  auto& c = std::get<Crossing>(v);
  return "crossing " + to_string(c.first) + " " + to_string(c.second);
}

std::string describe(const GlobalCertificate& c) {
  if (auto* x = std::get_if<Certified>(&c))
    return "certified on [" + std::to_string(x->window.lo) + "," +
           std::to_string(x->window.hi) + "]";
  if (auto* x = std::get_if<Refuted>(&c)) return "refuted by " + to_string(x->witness);
  return "unknown: " + std::get<Unknown>(c).reason;
}

std::set<Ind> perp_window(const ArcFamily& f, Window w) {
  // Members whose region H(a) can meet the window: those inside w +- 1, plus
  // the nearest far partner of each vertex on either side.
  std::vector<Ind> relevant;
  for (const auto& a : arcs_in_window(f, {w.lo - 1, w.hi + 1})) relevant.push_back(to_ind(a));
  for (Int v = w.lo; v <= w.hi; ++v) {
    if (auto r = min_right_partner(f, v, w.hi + 1)) relevant.push_back({v, *r});
    if (auto l = max_left_partner(f, v, w.lo - 1)) relevant.push_back({*l, v});
  }

  std::set<Ind> out;
  for (const auto& c : window_candidates(w)) {
    const Ind x = to_ind(c);
    bool free = std::none_of(relevant.begin(), relevant.end(),
                             [&](const Ind& a) { return hom_dim(shift(a, -1), x) == 1; });
    if (free) out.insert(x);
  }
  return out;
}

std::string to_string(FFReason r) {
  switch (r) {
    case FFReason::Fountain: return "fountain";
    case FFReason::SplitFountains: return "split-fountains";
    case FFReason::LocallyFinite: break;
  }
  return "locally-finite";
}

FFVerdict functorially_finite(const ArcFamily& f) {
  auto cert = certify_global_maximal(f);
  if (!std::holds_alternative<Certified>(cert))
    throw PreconditionError("functorial finiteness needs a certified maximal family (" +
                            describe(cert) + ")");
  const auto c = classify(f);
  if (c.locally_finite) return {true, FFReason::LocallyFinite, {}, {}};
  if (!c.fountains.empty()) {
    Int v = *c.fountains.begin();
    return {true, FFReason::Fountain, v, v};
  }
  FFVerdict out{false, FFReason::SplitFountains, {}, {}};
  if (!c.left_fountains.empty()) out.left_fountain = *c.left_fountains.begin();
  if (!c.right_fountains.empty()) out.right_fountain = *c.right_fountains.begin();
  return out;
}

std::vector<Triangle> triangles_in_window(const ArcFamily& f, Window w) {
  const auto members = arcs_in_window(f, w);
  const std::set<Arc> present(members.begin(), members.end());
  auto side = [&](Int u, Int v) { return v == u + 1 || present.contains({u, v}); };

  std::vector<Triangle> out;
  for (Int v2 = w.lo + 2; v2 <= w.hi; ++v2)
    for (Int v0 = w.lo; v0 <= v2 - 2; ++v0) {
      if (!side(v0, v2)) continue;
      for (Int v1 = v0 + 1; v1 < v2; ++v1)
        if (side(v0, v1) && side(v1, v2)) out.push_back({v0, v1, v2});
    }
  return out;
}

Quadrilateral quadrilateral(const ArcFamily& f, Arc a) {
  if (!family_contains(f, a)) throw NotMemberError(to_string(a) + " is not a member");

  std::vector<Int> inner;
  for (Int v = a.left + 1; v < a.right; ++v)
    if (family_has_side(f, a.left, v) && family_has_side(f, v, a.right)) inner.push_back(v);
  if (inner.size() != 1)
    throw PreconditionError("the face below " + to_string(a) + " is not a triangle");

  Quadrilateral q{inner.front(), std::nullopt};
  if (auto l = max_left_partner(f, a.right, a.left); l && family_has_side(f, *l, a.left))
    q.outer_apex = *l;
  else if (auto r = min_right_partner(f, a.left, a.right); r && family_has_side(f, a.right, *r))
    q.outer_apex = *r;
  return q;
}

}  // namespace infgon
