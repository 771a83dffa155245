#include "infgon/service.hpp"

#include <functional>
#include <map>

#include "infgon/errors.hpp"
#include "infgon/family_io.hpp"
#include "infgon/render.hpp"
#include "infgon/report.hpp"

namespace infgon::service {

namespace {

using report::Json;
using report::to_json;

struct BadRequest : Error {
  using Error::Error;
};

struct Unprocessable : Error {
  Unprocessable(std::string kind, const std::string& what) : Error(what), kind(std::move(kind)) {}
  std::string kind;
};

const Json& field(const Json& req, const char* key) {
  if (!req.contains(key)) throw BadRequest(std::string("missing field '") + key + "'");
  return req.at(key);
}

Int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw BadRequest(std::string(what) + " must be an integer");
  return j.get<Int>();
}

std::pair<Int, Int> pair_of(const Json& j, const char* what) {
  if (j.is_array() && j.size() == 2) return {integer(j[0], what), integer(j[1], what)};
  throw BadRequest(std::string(what) + " must be a pair [a, b]");
}

ArcFamily family(const Json& req) {
  const auto& f = field(req, "family");
  if (!f.is_string()) throw BadRequest("'family' must be the document text");
  return parse_family(f.get<std::string>());
}

Window window(const Json& w) {
  Int lo = 0, hi = 0;
  if (w.is_object()) {
    lo = integer(field(w, "lo"), "window.lo");
    hi = integer(field(w, "hi"), "window.hi");
  } else {
    std::tie(lo, hi) = pair_of(w, "window");
  }
  if (lo > hi) throw BadRequest("window needs lo <= hi");
  return {lo, hi};
}

Arc arc(const Json& j, const char* what) {
  auto [m, n] = pair_of(j, what);
  Arc a{m, n};
  if (!a.valid()) throw BadRequest(std::string(what) + " violates m <= n-2");
  return a;
}

Json verdicts(const ArcFamily& f) {
  Json out{{"classification", to_json(classify(f))}};
  const auto cert = certify_global_maximal(f);
  out["certificate"] = to_json(cert);
  out["ff"] = std::holds_alternative<Certified>(cert) ? to_json(functorially_finite(f))
                                                      : Json(nullptr);
  return out;
}

Json validate(const Json& req) {
  const auto& f = field(req, "family");
  if (!f.is_string()) throw BadRequest("'family' must be the document text");
  try {
    const ArcFamily fam = parse_family(f.get<std::string>());
    return Json{{"valid", true}, {"document", serialize_family(fam)}, {"family", to_json(fam)}};
  } catch (const ParseError& e) {
    return Json{{"valid", false}, {"line", e.line}, {"error", e.message}};
  }
}

Json classify_view(const Json& req) { return verdicts(family(req)); }

Json window_arcs(const Json& req) {
  const Window w = window(field(req, "window"));
  Json arcs = Json::array();
  for (const auto& a : arcs_in_window(family(req), w)) arcs.push_back(to_json(a));
  return Json{{"window", to_json(w)}, {"arcs", arcs}};
}

Json maximal(const Json& req) {
  const ArcFamily f = family(req);
  Json out{{"global", to_json(certify_global_maximal(f))}};
  if (req.contains("window")) out["window"] = to_json(is_window_maximal(f, window(req["window"])));
  return out;
}

Json mutate_view(const Json& req) {
  const ArcFamily f = family(req);
  const Arc a = arc(field(req, "arc"), "arc");
  try {
    const Arc star = exchange_arc(f, a);
    const ArcFamily g = mutate(f, a);
    Json out = verdicts(g);
    out["arc"] = to_json(a);
    out["exchange"] = to_json(star);
    out["sides"] = to_json(exchange_sides(f, a));
    out["family"] = serialize_family(g);
    return out;
  } catch (const NotMemberError& e) {
    throw Unprocessable("not-member", e.what());
  } catch (const NotMutableError& e) {
    throw Unprocessable("not-mutable", e.what());
  }
}

Json quiver_view(const Json& req) {
  const Quiver q = cluster_quiver(family(req), window(field(req, "window")));
  Json out = to_json(q);
  out["dot"] = to_dot(q);
  return out;
}

Json hom(const Json& req) {
  const Ind x = to_ind(arc(field(req, "x"), "x"));
  const Ind y = to_ind(arc(field(req, "y"), "y"));
  return Json{{"x", to_json(x)},
              {"y", to_json(y)},
              {"forward", hom_dim(x, y)},
              {"backward", hom_dim(y, x)},
              {"kind", to_string(morphism_kind(x, y))}};
}

Json render(const Json& req) {
  const ArcFamily f = family(req);
  const Window w = window(field(req, "window"));
  const std::string subject = req.value("subject", std::string("family"));
  if (subject == "family") return Json{{"svg", render_svg(f, w)}};
  if (subject == "quiver") return Json{{"svg", render_svg(cluster_quiver(f, w), w)}};
  throw BadRequest("subject must be \"family\" or \"quiver\"");
}

const std::map<std::string, std::function<Json(const Json&)>, std::less<>>& routes() {
  static const std::map<std::string, std::function<Json(const Json&)>, std::less<>> r{
      {"/api/validate", validate},       {"/api/classify", classify_view},
      {"/api/window-arcs", window_arcs}, {"/api/maximal", maximal},
      {"/api/mutate", mutate_view},      {"/api/quiver", quiver_view},
      {"/api/hom", hom},                 {"/api/render", render},
  };
  return r;
}

Response error(int status, const std::string& kind, const std::string& message,
               Json extra = Json::object()) {
  extra["error"] = message;
  extra["kind"] = kind;
  return {status, report::dump(extra)};
}

}  // namespace

const std::vector<std::string>& endpoints() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : routes()) v.push_back(k);
    return v;
  }();
  return names;
}

Response handle(std::string_view path, std::string_view body) {
  auto route = routes().find(path);
  if (route == routes().end()) return error(404, "not-found", "no endpoint " + std::string(path));

  Json req = Json::parse(body, nullptr, false);
  if (req.is_discarded() || !req.is_object())
    return error(400, "bad-request", "request body must be a JSON object");

  try {
    return {200, report::dump(route->second(req))};
  } catch (const BadRequest& e) {
    return error(400, "bad-request", e.what());
  } catch (const ParseError& e) {
    return error(400, "parse", e.message, Json{{"line", e.line}});
  } catch (const Unprocessable& e) {
    return error(422, e.kind, e.what());
  } catch (const PreconditionError& e) {
    return error(422, "precondition", e.what());
  } catch (const Error& e) {
    return error(422, "domain", e.what());
  } catch (const std::length_error& e) {
    return error(422, "too-large", e.what());
  }
}

}  // namespace infgon::service
