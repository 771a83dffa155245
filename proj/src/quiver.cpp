#include "infgon/quiver.hpp"

#include <sstream>
#include <stdexcept>

#include "infgon/errors.hpp"
#include "infgon/mutation.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

void Quiver::add_arrow(Arc from, Arc to, int times) {
  if (times <= 0) return;
  vertices_.insert(from);
  vertices_.insert(to);
  arrows_[{from, to}] += times;
}

int Quiver::multiplicity(Arc from, Arc to) const {
  auto it = arrows_.find({from, to});
  return it == arrows_.end() ? 0 : it->second;
}

int Quiver::arrow_count() const {
  int n = 0;
  for (const auto& [_, m] : arrows_) n += m;
  return n;
}

bool Quiver::has_loops() const {
  for (const auto& [e, _] : arrows_)
    if (e.first == e.second) return true;
  return false;
}

bool Quiver::has_two_cycles() const {
  for (const auto& [e, _] : arrows_)
    if (e.first != e.second && arrows_.contains({e.second, e.first})) return true;
  return false;
}

Quiver cluster_quiver(const ArcFamily& f, Window w) {
  Quiver q;
  for (const auto& a : arcs_in_window(f, w)) q.add_vertex(a);
  for (const auto& t : triangles_in_window(f, w)) {
    const Arc s1{t.v0, t.v1}, s2{t.v1, t.v2}, s3{t.v0, t.v2};
    auto link = [&](Arc x, Arc y) {
      if (x.valid() && y.valid()) q.add_arrow(x, y);
    };
    link(s1, s2);
    link(s2, s3);
    link(s3, s1);
  }
  return q;
}

Quiver fz_mutate(const Quiver& q, Arc v) {
  if (!q.vertices().contains(v))
    throw std::invalid_argument(to_string(v) + " is not a vertex of the quiver");
  if (q.has_loops() || q.has_two_cycles())
    throw PreconditionError("FZ mutation needs a quiver without loops or 2-cycles");

  std::map<std::pair<Arc, Arc>, int> next;
  for (const auto& [e, m] : q.arrows()) {
    if (e.first == v || e.second == v)
      next[{e.second, e.first}] += m;
    else
      next[e] += m;
  }
  for (const auto& [in, m1] : q.arrows()) {
    if (in.second != v) continue;
    for (const auto& [out, m2] : q.arrows())
      if (out.first == v) next[{in.first, out.second}] += m1 * m2;
  }
  for (auto& [e, m] : next) {
    if (e.first >= e.second) continue;
    auto back = next.find({e.second, e.first});
    if (back == next.end()) continue;
    int cancel = std::min(m, back->second);
    m -= cancel;
    back->second -= cancel;
  }

  Quiver out;
  for (const auto& x : q.vertices()) out.add_vertex(x);
  for (const auto& [e, m] : next) out.add_arrow(e.first, e.second, m);
  return out;
}

Quiver relabel(const Quiver& q, Arc from, Arc to) {
  auto rename = [&](Arc x) { return x == from ? to : x; };
  Quiver out;
  for (const auto& x : q.vertices()) out.add_vertex(rename(x));
  for (const auto& [e, m] : q.arrows()) out.add_arrow(rename(e.first), rename(e.second), m);
  return out;
}

bool quivers_equal_on(const Quiver& a, const Quiver& b, const std::set<Arc>& keep) {
  for (const auto& x : keep)
    if (a.vertices().contains(x) != b.vertices().contains(x)) return false;
  auto induced = [&](const Quiver& q) {
    Quiver::ArrowMap out;
    for (const auto& [e, m] : q.arrows())
      if (keep.contains(e.first) && keep.contains(e.second)) out[e] = m;
    return out;
  };
  return induced(a) == induced(b);
}

std::set<Arc> settled_vertices(const ArcFamily& f, Window w) {
  std::set<Arc> out;
  for (const auto& a : arcs_in_window(f, w)) {
    try {
      auto quad = quadrilateral(f, a);
      if (!quad.outer_apex || w.contains(*quad.outer_apex)) out.insert(a);
    } catch (const PreconditionError&) {
      // face below is not a triangle
    }
  }
  return out;
}

bool flip_matches_fz(const ArcFamily& f, Window w, Arc a) {
  const Arc star = exchange_arc(f, a);
  const ArcFamily g = mutate(f, a);

  const Quiver predicted = relabel(fz_mutate(cluster_quiver(f, w), a), a, star);
  const Quiver actual = cluster_quiver(g, w);

  const auto before = settled_vertices(f, w);
  const auto after = settled_vertices(g, w);
  std::set<Arc> keep;
  for (const auto& x : before)
    if (x != a && after.contains(x)) keep.insert(x);
  if (before.contains(a) && after.contains(star)) keep.insert(star);
  return quivers_equal_on(predicted, actual, keep);
}

std::string to_dot(const Quiver& q) {
  auto name = [](Arc a) {
    return "\"" + std::to_string(a.left) + "," + std::to_string(a.right) + "\"";
  };
  std::ostringstream os;
  os << "digraph cluster_quiver {\n";
  for (const auto& v : q.vertices()) os << "  " << name(v) << ";\n";
  for (const auto& [e, m] : q.arrows())
    for (int i = 0; i < m; ++i) os << "  " << name(e.first) << " -> " << name(e.second) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace infgon
