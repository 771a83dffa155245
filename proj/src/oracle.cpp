#include "infgon/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>

#include "infgon/errors.hpp"
#include "infgon/family_io.hpp"
#include "infgon/mutation.hpp"
#include "infgon/quiver.hpp"
#include "infgon/triangulation.hpp"

namespace infgon::oracle {

namespace {

bool interleave(Arc a, Arc b) {
  auto strictly_between = [](Int x, Int lo, Int hi) { return lo < x && x < hi; };
  return (strictly_between(b.left, a.left, a.right) && b.right > a.right) ||
         (strictly_between(a.left, b.left, b.right) && a.right > b.right);
}

ArcSet candidates(Window w) {
  ArcSet out;
  for (Int i = w.lo; i <= w.hi; ++i)
    for (Int j = i + 2; j <= w.hi; ++j) out.push_back({i, j});
  return out;
}

void extend(const ArcSet& cand, std::size_t next, ArcSet& chosen, Window w,
            std::vector<ArcSet>& out) {
  if (next == cand.size()) {
    if (brute_maximal(chosen, w)) out.push_back(chosen);
    return;
  }
  extend(cand, next + 1, chosen, w, out);
  const Arc c = cand[next];
  if (std::none_of(chosen.begin(), chosen.end(), [&](Arc a) { return interleave(a, c); })) {
    chosen.push_back(c);
    extend(cand, next + 1, chosen, w, out);
    chosen.pop_back();
  }
}

std::set<Arc> member_set(const ArcFamily& f, Window w) {
  auto v = arcs_in_window(f, w);
  return {v.begin(), v.end()};
}

struct Tally {
  Check check;
  int failures = 0;

  explicit Tally(std::string name) { check.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) check.detail = what;
    check.passed = false;
  }

  Check done(const std::string& summary) {
    if (check.passed) check.detail = summary;
    else check.detail += " (" + std::to_string(failures) + " failures)";
    return check;
  }
};

std::string show(const ArcSet& s) {
  std::string out = "{";
  for (const auto& a : s) out += to_string(a);
  return out + "}";
}

}  // namespace

Int vertex_limit() {
  if (const char* env = std::getenv("INFGON_ORACLE_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultVertexLimit;
}

std::int64_t catalan(Int k) {
  std::int64_t c = 1;
  for (Int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

bool brute_maximal(const ArcSet& members, Window w) {
  for (const auto& c : candidates(w)) {
    bool member = std::find(members.begin(), members.end(), c) != members.end();
    if (member) continue;
    if (std::none_of(members.begin(), members.end(), [&](Arc a) { return interleave(a, c); }))
      return false;
  }
  return true;
}

std::vector<ArcSet> maximal_sets(Window w) {
  const ArcSet cand = candidates(w);
  std::vector<ArcSet> out;
  ArcSet chosen;
  extend(cand, 0, chosen, w, out);
  for (auto& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

ArcSet brute_replacements(const ArcSet& members, Arc a, Window w) {
  ArcSet rest;
  for (const auto& m : members)
    if (m != a) rest.push_back(m);
  ArcSet out;
  for (const auto& b : candidates(w)) {
    if (b == a || std::find(rest.begin(), rest.end(), b) != rest.end()) continue;
    if (std::any_of(rest.begin(), rest.end(), [&](Arc m) { return interleave(m, b); })) continue;
    ArcSet trial = rest;
    trial.push_back(b);
    if (brute_maximal(trial, w)) out.push_back(b);
  }
  return out;
}

ArcFamily as_family(const ArcSet& members) {
  ArcFamily f;
  for (const auto& a : members) f.orbits.push_back(Orbit::single(a));
  return f;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

SuiteReport run_suite(Int max_vertices) {
  if (max_vertices < 4) throw PreconditionError("the suite needs at least 4 vertices");

  SuiteReport r;
  r.vertices = max_vertices;
  Tally counts("enumeration counts"), perp("perp equals members"), flips("flip uniqueness"),
      involution("flip involution"), connected("flip graph connected"),
      quiver("quiver compatibility");
  std::int64_t total_sets = 0, total_flips = 0;

  for (Int n = 4; n <= max_vertices; ++n) {
    const Window w{0, n - 1};
    const Arc hull{w.lo, w.hi};
    const auto sets = maximal_sets(w);
    r.counts.push_back(static_cast<std::int64_t>(sets.size()));
    total_sets += static_cast<std::int64_t>(sets.size());
    counts.expect(static_cast<std::int64_t>(sets.size()) == catalan(n - 2),
                  "n=" + std::to_string(n) + ": " + std::to_string(sets.size()) +
                      " maximal sets, expected " + std::to_string(catalan(n - 2)));

    std::map<ArcSet, std::size_t> index;
    for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i]] = i;
    std::vector<std::vector<std::size_t>> adjacent(sets.size());

    for (std::size_t i = 0; i < sets.size(); ++i) {
      const ArcSet& t = sets[i];
      const ArcFamily f = as_family(t);
      const std::string where = "n=" + std::to_string(n) + " " + show(t);

      std::set<Ind> members;
      for (const auto& a : t) members.insert(to_ind(a));
      perp.expect(std::holds_alternative<Maximal>(is_window_maximal(f, w)),
                  where + ": engine does not see a maximal family");
      perp.expect(perp_window(f, w) == members, where + ": perp differs from members");
      for (const auto& drop : t) {
        ArcSet smaller;
        for (const auto& a : t)
          if (a != drop) smaller.push_back(a);
        std::set<Ind> fewer;
        for (const auto& a : smaller) fewer.insert(to_ind(a));
        perp.expect(perp_window(as_family(smaller), w) != fewer,
                    where + " without " + to_string(drop) + ": perp equals members");
      }

      const Quiver q = cluster_quiver(f, w);
      quiver.expect(!q.has_loops() && !q.has_two_cycles(), where + ": loop or 2-cycle");

      for (const auto& a : t) {
        if (a == hull) {
          bool refused = false;
          try {
            exchange_arc(f, a);
          } catch (const NotMutableError&) {
            refused = true;
          }
          flips.expect(refused, where + ": the hull arc was flippable");
          continue;
        }
        ++total_flips;
        const ArcSet brute = brute_replacements(t, a, w);
        const Arc star = exchange_arc(f, a);
        flips.expect(brute.size() == 1 && brute.front() == star,
                     where + " at " + to_string(a) + ": engine " + to_string(star) +
                         ", brute force " + show(brute));

        const ArcFamily g = mutate(f, a);
        involution.expect(exchange_arc(g, star) == a &&
                              serialize_family(mutate(g, star)) == serialize_family(f),
                          where + " at " + to_string(a) + ": flipping back differs");

        const auto after = member_set(g, w);
        ArcSet next(after.begin(), after.end());
        auto it = index.find(next);
        flips.expect(it != index.end(), where + " at " + to_string(a) + ": flip leaves the suite");
        if (it != index.end()) adjacent[i].push_back(it->second);

        quiver.expect(flip_matches_fz(f, w, a),
                      where + " at " + to_string(a) + ": FZ mutation disagrees");
      }
    }

    std::vector<bool> seen(sets.size(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop();
      for (auto j : adjacent[i])
        if (!seen[j]) {
          seen[j] = true;
          ++reached;
          todo.push(j);
        }
    }
    connected.expect(reached == sets.size(), "n=" + std::to_string(n) + ": reached " +
                                                 std::to_string(reached) + " of " +
                                                 std::to_string(sets.size()));
  }

  std::string list;
  for (std::size_t i = 0; i < r.counts.size(); ++i)
    list += (i ? ", " : "") + std::to_string(r.counts[i]);
  r.checks.push_back(counts.done("maximal sets for n=4.." + std::to_string(max_vertices) + ": " +
                                 list));
  r.checks.push_back(perp.done(std::to_string(total_sets) + " families and their one-arc deletions"));
  r.checks.push_back(flips.done(std::to_string(total_flips) + " flips match the unique replacement"));
  r.checks.push_back(involution.done(std::to_string(total_flips) + " flips undone exactly"));
  r.checks.push_back(connected.done("every n"));
  r.checks.push_back(quiver.done("no loops or 2-cycles; FZ agrees on " +
                                 std::to_string(total_flips) + " flips"));
  return r;
}

void print(std::ostream& os, const SuiteReport& r) {
  os << "window suite, n = 4.." << r.vertices << ": " << r.counts.back()
     << " maximal sets at n = " << r.vertices << "\n";
  for (const auto& c : r.checks)
    os << (c.passed ? "  ok    " : "  FAIL  ") << c.name << ": " << c.detail << "\n";
}

}  // namespace infgon::oracle
