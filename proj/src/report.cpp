#include "infgon/report.hpp"

namespace infgon::report {

namespace {

Json arcs(const auto& range) {
  Json out = Json::array();
  for (const auto& a : range) out.push_back(to_json(a));
  return out;
}

Json ints(const std::set<Int>& s) { return Json(std::vector<Int>(s.begin(), s.end())); }

}  // namespace

Json to_json(Arc a) { return Json::array({a.left, a.right}); }
Json to_json(Ind x) { return Json::array({x.m, x.n}); }
Json to_json(Window w) { return Json{{"lo", w.lo}, {"hi", w.hi}}; }

Json to_json(const ArcFamily& f) {
  Json orbits = Json::array();
  for (const auto& o : f.orbits) {
    orbits.push_back({{"base", to_json(o.base)},
                      {"dl", o.step_left},
                      {"dr", o.step_right},
                      {"count", o.count ? Json(*o.count) : Json(nullptr)}});
  }
  return Json{{"orbits", orbits}, {"removed", arcs(f.removed)}};
}

Json to_json(const Validation& v) {
  Json j{{"valid", std::holds_alternative<Valid>(v)}, {"detail", describe(v)}};
  if (auto* x = std::get_if<MalformedOrbit>(&v)) {
    j["kind"] = "malformed-orbit";
    j["orbit"] = x->orbit;
  } else if (auto* x = std::get_if<InvalidArc>(&v)) {
    j["kind"] = "invalid-arc";
    j["orbit"] = x->orbit;
    j["k"] = x->k;
  } else if (auto* x = std::get_if<StrayRemoval>(&v)) {
    j["kind"] = "stray-removal";
    j["arc"] = to_json(x->arc);
  } else if (auto* x = std::get_if<SelfCrossing>(&v)) {
    j["kind"] = "self-crossing";
    j["arcs"] = Json::array({to_json(x->first), to_json(x->second)});
  } else {
    j["kind"] = "valid";
  }
  return j;
}

Json to_json(const Classification& c) {
  return Json{{"locally_finite", c.locally_finite},
              {"left_fountains", ints(c.left_fountains)},
              {"right_fountains", ints(c.right_fountains)},
              {"fountains", ints(c.fountains)}};
}

Json to_json(const MaximalityVerdict& v) {
  if (std::holds_alternative<Maximal>(v)) return Json{{"verdict", "maximal"}};
  if (auto* m = std::get_if<Missing>(&v))
    return Json{{"verdict", "missing"}, {"witness", to_json(m->witness)}};
  const auto& c = std::get<Crossing>(v);
  return Json{{"verdict", "crossing"},
              {"arcs", Json::array({to_json(c.first), to_json(c.second)})}};
}

Json to_json(const GlobalCertificate& c) {
  if (auto* x = std::get_if<Certified>(&c))
    return Json{{"verdict", "certified"}, {"window", to_json(x->window)}};
  if (auto* x = std::get_if<Refuted>(&c))
    return Json{{"verdict", "refuted"}, {"witness", to_json(x->witness)}};
  return Json{{"verdict", "unknown"}, {"reason", std::get<Unknown>(c).reason}};
}

Json to_json(const FFVerdict& v) {
  Json j{{"functorially_finite", v.functorially_finite}, {"reason", to_string(v.reason)}};
  j["left_fountain"] = v.left_fountain ? Json(*v.left_fountain) : Json(nullptr);
  j["right_fountain"] = v.right_fountain ? Json(*v.right_fountain) : Json(nullptr);
  return j;
}

Json to_json(const ExchangeSides& s) {
  return Json{{"inner", arcs(s.inner)}, {"outer", arcs(s.outer)}};
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& [e, m] : q.arrows())
    arrows.push_back({{"from", to_json(e.first)}, {"to", to_json(e.second)}, {"multiplicity", m}});
  return Json{{"vertices", arcs(q.vertices())}, {"arrows", arrows}};
}

Json to_json(const Triangle& t) { return Json::array({t.v0, t.v1, t.v2}); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace infgon::report
