#include <doctest.h>

#include "infgon/errors.hpp"
#include "infgon/homcalc.hpp"
#include "infgon/mutation.hpp"
#include "infgon/quiver.hpp"
#include "infgon/triangulation.hpp"
#include "support.hpp"

using namespace infgon;

namespace {

const Arc X{0, 2}, Y{0, 3}, Z{0, 4};

Quiver path(std::initializer_list<std::pair<Arc, Arc>> arrows) {
  Quiver q;
  for (const auto& [a, b] : arrows) q.add_arrow(a, b);
  return q;
}

void check_degree_bound(const Quiver& q) {
  for (const auto& v : q.vertices()) {
    std::set<Arc> in, out;
    for (const auto& [e, m] : q.arrows()) {
      if (e.second == v) in.insert(e.first);
      if (e.first == v) out.insert(e.second);
    }
    CHECK(in.size() <= 2);
    CHECK(out.size() <= 2);
  }
}

}  // namespace

TEST_CASE("leapfrog quiver is an alternating line") {
  const Quiver q = cluster_quiver(canonical::leapfrog(), {-4, 4});
  CHECK(q.vertices().size() == 7);
  CHECK(q.arrow_count() == 6);
  const Arc line[] = {{-1, 1}, {-2, 1}, {-2, 2}, {-3, 2}, {-3, 3}, {-4, 3}, {-4, 4}};
  for (int i = 0; i + 1 < 7; ++i) {
    const bool forward = i % 2 == 0;
    CHECK(q.multiplicity(line[i], line[i + 1]) == (forward ? 1 : 0));
    CHECK(q.multiplicity(line[i + 1], line[i]) == (forward ? 0 : 1));
  }
}

TEST_CASE("fountain quiver on [0,5] joins consecutive arcs only") {
  const Quiver q = cluster_quiver(canonical::fountain(), {0, 5});
  CHECK(q.vertices() == std::set<Arc>{{0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(q.arrow_count() == 3);
  for (Int k = 2; k < 5; ++k) CHECK(q.multiplicity({0, k + 1}, {0, k}) == 1);
}

TEST_CASE("empty family gives the empty quiver") {
  const Quiver q = cluster_quiver({}, {-3, 3});
  CHECK(q.vertices().empty());
  CHECK(q.arrows().empty());
}

TEST_CASE("fz_mutate small cases") {
  CHECK(fz_mutate(path({{X, Y}, {Z, Y}}), Y) == path({{Y, X}, {Y, Z}}));
  CHECK(fz_mutate(path({{X, Y}, {Y, Z}}), Y) == path({{Y, X}, {Z, Y}, {X, Z}}));
  // the new composite cancels an existing reverse arrow
  CHECK(fz_mutate(path({{X, Y}, {Y, Z}, {Z, X}}), Y) == path({{Y, X}, {Z, Y}}));

  Quiver doubled;
  doubled.add_arrow(X, Y, 2);
  doubled.add_arrow(Y, Z, 3);
  const Quiver d = fz_mutate(doubled, Y);
  CHECK(d.multiplicity(X, Z) == 6);
  CHECK(d.multiplicity(Y, X) == 2);
  CHECK(fz_mutate(d, Y) == doubled);

  CHECK_THROWS_AS(fz_mutate(path({{X, Y}}), Z), std::invalid_argument);
  CHECK_THROWS_AS(fz_mutate(path({{X, Y}, {Y, X}}), X), PreconditionError);
  CHECK_THROWS_AS(fz_mutate(path({{X, X}}), X), PreconditionError);
}

TEST_CASE("fz_mutate is an involution on the leapfrog quiver") {
  const Quiver q = cluster_quiver(canonical::leapfrog(), {-4, 4});
  CHECK(fz_mutate(fz_mutate(q, {-2, 2}), {-2, 2}) == q);
  for (const auto& v : q.vertices()) CHECK(fz_mutate(fz_mutate(q, v), v) == q);
}

TEST_CASE("quivers_equal_on") {
  const Quiver q = path({{X, Y}, {Y, Z}});
  CHECK(quivers_equal_on(q, q, q.vertices()));
  CHECK(quivers_equal_on(q, path({{X, Y}, {Z, Y}}), {X, Y}));
  CHECK_FALSE(quivers_equal_on(path({{X, Y}}), path({{Y, X}}), {X, Y}));
  CHECK(relabel(q, Y, {1, 5}).multiplicity(X, {1, 5}) == 1);
}

TEST_CASE("quivers of canonical families on windows of 9 to 17 vertices") {
  const ArcFamily fams[] = {canonical::fountain(), canonical::leapfrog(), canonical::split()};
  for (const auto& f : fams)
    for (Int size = 9; size <= 17; ++size)
      for (Int lo : {Int{-size / 2}, Int{-size + 3}, Int{-2}}) {
        const Window w{lo, lo + size - 1};
        const Quiver q = cluster_quiver(f, w);
        CHECK_FALSE(q.has_loops());
        CHECK_FALSE(q.has_two_cycles());
        check_degree_bound(q);
        for (const auto& a : settled_vertices(f, w)) {
          if (!quadrilateral(f, a).outer_apex) continue;
          CAPTURE(to_string(a));
          CHECK(flip_matches_fz(f, w, a));
        }
      }
}

TEST_CASE("members of a certified family have Homs in one direction at most") {
  const ArcFamily fams[] = {canonical::fountain(), canonical::leapfrog(), canonical::split()};
  for (const auto& f : fams) {
    const auto arcs = arcs_in_window(f, {-8, 8});
    for (const auto& a : arcs)
      for (const auto& b : arcs)
        if (a != b) CHECK_FALSE((hom_dim(to_ind(a), to_ind(b)) == 1 && hom_dim(to_ind(b), to_ind(a)) == 1));
  }
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(path({{X, Y}}));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("\"0,2\" -> \"0,3\";") != std::string::npos);
}
