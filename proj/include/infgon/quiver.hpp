#pragma once

// The quiver of a cluster restricted to a window, and Fomin-Zelevinsky
// mutation.
//
// Arrows come from faces: in every triangle v0 < v1 < v2 the arc sides are
// joined cyclically (v0,v1) -> (v1,v2) -> (v0,v2) -> (v0,v1), skipping
// boundary edges. On the leapfrog this gives the alternating line
// (-1,1) -> (-2,1) <- (-2,2) -> (-3,2) <- ...

#include <map>
#include <set>
#include <string>
#include <utility>

#include "infgon/arcs.hpp"

namespace infgon {

class Quiver {
 public:
  using ArrowMap = std::map<std::pair<Arc, Arc>, int>;

  void add_vertex(Arc v) { vertices_.insert(v); }
  /// Adds `times` parallel arrows; both ends become vertices.
  void add_arrow(Arc from, Arc to, int times = 1);

  const std::set<Arc>& vertices() const { return vertices_; }
  /// Multiplicities, all positive, in deterministic order.
  const ArrowMap& arrows() const { return arrows_; }
  int multiplicity(Arc from, Arc to) const;
  int arrow_count() const;

  bool has_loops() const;
  bool has_two_cycles() const;

  bool operator==(const Quiver&) const = default;

 private:
  std::set<Arc> vertices_;
  ArrowMap arrows_;
};

Quiver cluster_quiver(const ArcFamily& f, Window w);

/// Throws std::invalid_argument if `v` is not a vertex and PreconditionError
/// if `q` has loops or 2-cycles.
Quiver fz_mutate(const Quiver& q, Arc v);

/// Renames vertex `from` to `to`.
Quiver relabel(const Quiver& q, Arc from, Arc to);

/// Induced sub-multigraphs on `keep` agree.
bool quivers_equal_on(const Quiver& a, const Quiver& b, const std::set<Arc>& keep);

/// Member arcs in `w` whose neighbouring faces all lie inside `w`; on these
/// the windowed quiver loses no arrows.
std::set<Arc> settled_vertices(const ArcFamily& f, Window w);

/// Flip compatibility at `a`: FZ mutation of the windowed quiver agrees with
/// the quiver of the flipped family on vertices settled in both.
bool flip_matches_fz(const ArcFamily& f, Window w, Arc a);

/// Graphviz digraph.
std::string to_dot(const Quiver& q);

}  // namespace infgon
