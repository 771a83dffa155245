#include <doctest.h>

#include <map>
#include <random>

#include "infgon/errors.hpp"
#include "infgon/mutation.hpp"
#include "infgon/oracle.hpp"
#include "infgon/triangulation.hpp"
#include "support.hpp"

using namespace infgon;
using test::singles;

namespace {

std::set<Ind> as_inds(const std::vector<Arc>& arcs) {
  std::set<Ind> out;
  for (const auto& a : arcs) out.insert(to_ind(a));
  return out;
}

// Mutations and translations of the canonical families.
std::vector<ArcFamily> certified_variants(unsigned seed, int count) {
  std::mt19937 rng(seed);
  const ArcFamily bases[] = {canonical::fountain(), canonical::leapfrog(), canonical::split()};
  std::vector<ArcFamily> out;
  std::uniform_int_distribution<int> pick(0, 2), shift(-5, 5), steps(1, 6);
  while (static_cast<int>(out.size()) < count) {
    const Int t = shift(rng);
    ArcFamily f = translate(bases[pick(rng)], t);
    int n = steps(rng);
    for (int i = 0; i < n; ++i) {
      auto arcs = arcs_in_window(f, {t - 6, t + 6});
      if (arcs.empty()) break;
      std::uniform_int_distribution<std::size_t> which(0, arcs.size() - 1);
      try {
        f = mutate(f, arcs[which(rng)]);
      } catch (const NotMutableError&) {
      }
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("is_window_maximal examples") {
  CHECK(is_window_maximal(singles({{0, 3}, {0, 2}}), {0, 3}) == MaximalityVerdict{Maximal{}});
  CHECK(is_window_maximal(singles({{0, 3}}), {0, 3}) == MaximalityVerdict{Missing{{0, 2}}});
  CHECK(is_window_maximal(singles({{0, 2}, {1, 3}}), {0, 3}) ==
        MaximalityVerdict{Crossing{{0, 2}, {1, 3}}});
  CHECK(is_window_maximal(singles({{0, 2}, {1, 3}}), {-5, 9}) ==
        MaximalityVerdict{Crossing{{0, 2}, {1, 3}}});
  CHECK(is_window_maximal({}, {4, 5}) == MaximalityVerdict{Maximal{}});
  CHECK_THROWS_AS(is_window_maximal({{Orbit::single({0, 1})}, {}}, {0, 3}), PreconditionError);
}

TEST_CASE("window verdicts match the brute-force window check") {
  const ArcFamily fams[] = {canonical::fountain(), canonical::leapfrog(), canonical::split(),
                            singles({{0, 4}, {1, 3}}), singles({{-2, 3}, {0, 3}, {-2, 0}})};
  for (const auto& f : fams) {
    for (Int lo = -4; lo <= 0; ++lo)
      for (Int hi = lo; hi <= 5; ++hi) {
        const Window w{lo, hi};
        const auto v = is_window_maximal(f, w);
        bool brute = true;
        std::optional<Arc> first;
        auto cands = window_candidates(w);
        for (const auto& c : cands) {
          bool covered = false;
          for (Int u = -40; u <= 40 && !covered; ++u)
            for (Int x = u + 2; x <= 40 && !covered; ++x)
              covered = family_contains(f, {u, x}) && (Arc{u, x} == c || crosses({u, x}, c));
          if (!covered && !first) first = c;
          brute = brute && covered;
        }
        CHECK(std::holds_alternative<Maximal>(v) == brute);
        if (auto* m = std::get_if<Missing>(&v)) CHECK(m->witness == *first);
      }
  }
}

TEST_CASE("global certificates on the canonical families") {
  CHECK(std::holds_alternative<Certified>(certify_global_maximal(canonical::fountain())));
  CHECK(std::holds_alternative<Certified>(certify_global_maximal(canonical::leapfrog())));
  CHECK(std::holds_alternative<Certified>(certify_global_maximal(canonical::split())));
  CHECK(certification_bound(canonical::fountain()) == 8);
  CHECK(certify_global_maximal(canonical::fountain()) ==
        GlobalCertificate{Certified{{-8, 8}}});
}

TEST_CASE("refutations report the scan-order-first uncovered arc") {
  // (-2,0), (-1,1) and (0,2) all have key 2; (-2,0) comes first
  CHECK(certify_global_maximal(singles({{0, 2}})) == GlobalCertificate{Refuted{{-2, 0}}});
  CHECK(certify_global_maximal({}) == GlobalCertificate{Refuted{{-2, 0}}});

  // a right ray alone leaves everything on the far left uncovered
  ArcFamily ray{{Orbit::infinite({0, 2}, 0, 1)}, {}};
  CHECK(certify_global_maximal(ray) == GlobalCertificate{Refuted{{-2, 0}}});

  ArcFamily holed = canonical::leapfrog();
  holed.removed.insert({-30, 30});
  auto c = certify_global_maximal(holed);
  REQUIRE(std::holds_alternative<Refuted>(c));
  // both diagonals of the emptied quadrangle are uncovered; (-31,29) scans first
  CHECK(std::get<Refuted>(c).witness == Arc{-31, 29});
  CHECK_FALSE(is_covered(holed, {-30, 30}));
}

TEST_CASE("unsupported infinite shapes are Unknown") {
  ArcFamily f{{Orbit::infinite({0, 2}, 0, 2)}, {}};
  CHECK(std::holds_alternative<Unknown>(certify_global_maximal(f)));
  CHECK_THROWS_AS(functorially_finite(f), PreconditionError);
}

TEST_CASE("certificates are sound against large windows") {
  auto variants = certified_variants(3, 40);
  for (const auto& f : variants) {
    const auto c = certify_global_maximal(f);
    CAPTURE(describe(c));
    if (std::holds_alternative<Certified>(c)) {
      CHECK(std::holds_alternative<Maximal>(is_window_maximal(f, {-20, 20})));
    } else if (auto* r = std::get_if<Refuted>(&c)) {
      CHECK_FALSE(is_covered(f, r->witness));
    }
  }

  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    ArcFamily f = canonical::leapfrog();
    for (const auto& a : arcs_in_window(f, {-5, 5}))
      if (coin(rng) == 0) f.removed.insert(a);
    const auto c = certify_global_maximal(f);
    if (f.removed.empty()) {
      CHECK(std::holds_alternative<Certified>(c));
      continue;
    }
    REQUIRE(std::holds_alternative<Refuted>(c));
    const Arc w = std::get<Refuted>(c).witness;
    CHECK_FALSE(is_covered(f, w));
    for (const auto& cand : window_candidates({-12, 12}))
      if (scan_less(cand, w)) CHECK(is_covered(f, cand));
  }
}

TEST_CASE("perp_window") {
  CHECK(perp_window(singles({{0, 3}, {0, 2}}), {0, 3}) == std::set<Ind>{{0, 2}, {0, 3}});
  CHECK(perp_window({}, {0, 4}).size() == 6);
  CHECK(perp_window(canonical::fountain(), {-3, 3}) ==
        as_inds(arcs_in_window(canonical::fountain(), {-3, 3})));

  const ArcFamily fams[] = {canonical::fountain(), canonical::leapfrog(), canonical::split()};
  for (const auto& f : fams)
    for (Int lo = -6; lo <= 0; ++lo)
      for (Int hi = lo; hi <= 6; ++hi)
        CHECK(perp_window(f, {lo, hi}) == as_inds(arcs_in_window(f, {lo, hi})));

  // dropping one arc of a maximal family makes the perp strictly larger
  ArcFamily f = canonical::leapfrog();
  f.removed.insert({-2, 1});
  auto p = perp_window(f, {-3, 3});
  CHECK(p != as_inds(arcs_in_window(f, {-3, 3})));
  CHECK(p.contains(Ind{-2, 1}));
}

TEST_CASE("functorial finiteness follows the fountain structure") {
  auto v = functorially_finite(canonical::fountain());
  CHECK(v.functorially_finite);
  CHECK(v.reason == FFReason::Fountain);
  CHECK(v.left_fountain == 0);
  CHECK(v.right_fountain == 0);

  v = functorially_finite(canonical::leapfrog());
  CHECK(v.functorially_finite);
  CHECK(v.reason == FFReason::LocallyFinite);

  v = functorially_finite(canonical::split());
  CHECK_FALSE(v.functorially_finite);
  CHECK(v.reason == FFReason::SplitFountains);
  CHECK(v.left_fountain == 0);
  CHECK(v.right_fountain == 1);

  for (Int t = -5; t <= 5; ++t) {
    CHECK(functorially_finite(translate(canonical::fountain(), t)).left_fountain == t);
    CHECK(functorially_finite(translate(canonical::leapfrog(), t)).reason ==
          FFReason::LocallyFinite);
    auto s = functorially_finite(translate(canonical::split(), t));
    CHECK(s.right_fountain == t + 1);
    CHECK_FALSE(s.functorially_finite);
  }

  CHECK_THROWS_AS(functorially_finite(singles({{0, 2}})), PreconditionError);
  CHECK(to_string(FFReason::SplitFountains) == "split-fountains");
}

TEST_CASE("certified variants have at most one fountain on each side") {
  for (const auto& f : certified_variants(17, 60)) {
    if (!std::holds_alternative<Certified>(certify_global_maximal(f))) continue;
    const auto c = classify(f);
    CHECK(c.left_fountains.size() <= 1);
    CHECK(c.right_fountains.size() <= 1);
  }
}

TEST_CASE("triangles_in_window") {
  CHECK(triangles_in_window(canonical::fountain(), {-1, 3}) ==
        std::vector<Triangle>{{0, 1, 2}, {0, 2, 3}});
  CHECK(triangles_in_window(canonical::leapfrog(), {-2, 2}) ==
        std::vector<Triangle>{{-2, -1, 1}, {-1, 0, 1}, {-2, 1, 2}});
  CHECK(triangles_in_window({}, {0, 2}).empty());
  CHECK(triangles_in_window(singles({{0, 2}}), {0, 2}) == std::vector<Triangle>{{0, 1, 2}});
}

TEST_CASE("faces tile every window-maximal polygon") {
  for (Int n = 4; n <= 7; ++n) {
    const Window w{0, n - 1};
    for (const auto& t : oracle::maximal_sets(w)) {
      const ArcFamily f = oracle::as_family(t);
      const auto faces = triangles_in_window(f, w);
      CHECK(faces.size() == static_cast<std::size_t>(n - 2));
      std::map<Arc, int> borders;
      for (const auto& face : faces) {
        const Arc sides[] = {{face.v0, face.v1}, {face.v1, face.v2}, {face.v0, face.v2}};
        for (const auto& s : sides)
          for (const auto& o : sides) CHECK_FALSE(crosses(s, o));
        for (const auto& s : sides)
          if (s.valid()) ++borders[s];
      }
      for (const auto& a : t) CHECK(borders[a] == (a == Arc{w.lo, w.hi} ? 1 : 2));
    }
  }
}

TEST_CASE("quadrilateral") {
  CHECK(quadrilateral(canonical::fountain(), {0, 2}) == Quadrilateral{1, 3});
  CHECK(quadrilateral(canonical::leapfrog(), {-2, 2}) == Quadrilateral{1, -3});
  CHECK(quadrilateral(canonical::leapfrog(), {-1, 1}) == Quadrilateral{0, -2});
  CHECK(quadrilateral(singles({{0, 3}, {0, 2}}), {0, 3}) == Quadrilateral{2, std::nullopt});
  CHECK_THROWS_AS(quadrilateral(canonical::fountain(), {1, 3}), NotMemberError);
  CHECK_THROWS_AS(quadrilateral(singles({{0, 3}}), {0, 3}), PreconditionError);
}
