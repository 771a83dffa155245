#include <doctest.h>

#include <thread>

#include <json.hpp>

#include "infgon/http.hpp"
#include "infgon/service.hpp"
#include "support.hpp"

using namespace infgon;
using nlohmann::json;

namespace {

const std::string kFountain = "orbit 0 2 dl 0 dr 1\norbit -2 0 dl -1 dr 0\n";
const std::string kLeapfrog = "orbit -1 1 dl -1 dr 1\norbit -2 1 dl -1 dr 1\n";
const std::string kSplit = "orbit -2 0 dl -1 dr 0\norbit 1 3 dl 0 dr 1\n";

json call(const std::string& path, const json& body, int expect = 200) {
  const auto r = service::handle(path, body.dump());
  CHECK(r.status == expect);
  CHECK(r.content_type == "application/json");
  return json::parse(r.body);
}

}  // namespace

TEST_CASE("endpoint list") {
  CHECK(service::endpoints().size() == 8);
}

TEST_CASE("/api/validate") {
  auto ok = call("/api/validate", {{"family", kFountain}});
  CHECK(ok["valid"] == true);
  CHECK(ok["document"] == "infgon/1\norbit -2 0 dl -1 dr 0\norbit 0 2 dl 0 dr 1\n");

  auto bad = call("/api/validate", {{"family", "arc 0 2\narc 1 3\n"}});
  CHECK(bad["valid"] == false);
  CHECK(bad["line"] == 2);
}

TEST_CASE("/api/classify") {
  auto r = call("/api/classify", {{"family", kSplit}});
  CHECK(r["classification"]["left_fountains"] == json::array({0}));
  CHECK(r["classification"]["right_fountains"] == json::array({1}));
  CHECK(r["certificate"]["verdict"] == "certified");
  CHECK(r["ff"]["functorially_finite"] == false);
  CHECK(r["ff"]["reason"] == "split-fountains");

  auto open = call("/api/classify", {{"family", "arc 0 2"}});
  CHECK(open["certificate"]["verdict"] == "refuted");
  CHECK(open["ff"].is_null());
}

TEST_CASE("/api/window-arcs") {
  auto r = call("/api/window-arcs", {{"family", kFountain}, {"window", {{"lo", -3}, {"hi", 3}}}});
  CHECK(r["arcs"] == json::array({{-3, 0}, {-2, 0}, {0, 2}, {0, 3}}));
  auto same = call("/api/window-arcs", {{"family", kFountain}, {"window", {-3, 3}}});
  CHECK(same == r);
}

TEST_CASE("/api/maximal") {
  auto r = call("/api/maximal", {{"family", "arc 0 3"}, {"window", {0, 3}}});
  CHECK(r["window"]["verdict"] == "missing");
  CHECK(r["window"]["witness"] == json::array({0, 2}));
  CHECK(r["global"]["verdict"] == "refuted");
  CHECK_FALSE(call("/api/maximal", {{"family", kLeapfrog}}).contains("window"));
}

TEST_CASE("/api/mutate") {
  auto r = call("/api/mutate", {{"family", kLeapfrog}, {"arc", {-1, 1}}});
  CHECK(r["exchange"] == json::array({-2, 0}));
  CHECK(r["certificate"]["verdict"] == "certified");
  CHECK(r["ff"]["reason"] == "locally-finite");

  // flipping back gives the canonical original
  auto back = call("/api/mutate", {{"family", r["family"]}, {"arc", {-2, 0}}});
  auto canon = call("/api/validate", {{"family", kLeapfrog}});
  CHECK(back["family"] == canon["document"]);

  auto stuck = call("/api/mutate", {{"family", "arc 0 3\narc 0 2"}, {"arc", {0, 3}}}, 422);
  CHECK(stuck["kind"] == "not-mutable");
  auto absent = call("/api/mutate", {{"family", kFountain}, {"arc", {1, 3}}}, 422);
  CHECK(absent["kind"] == "not-member");
}

TEST_CASE("/api/quiver") {
  auto r = call("/api/quiver", {{"family", kLeapfrog}, {"window", {-4, 4}}});
  CHECK(r["vertices"].size() == 7);
  CHECK(r["arrows"].size() == 6);
  CHECK(r["dot"].get<std::string>().find("digraph") == 0);
}

TEST_CASE("/api/hom") {
  auto r = call("/api/hom", {{"x", {0, 2}}, {"y", {0, 3}}});
  CHECK(r["forward"] == 1);
  CHECK(r["backward"] == 0);
  CHECK(r["kind"] == "forward");
}

TEST_CASE("/api/render") {
  auto r = call("/api/render", {{"family", kFountain}, {"window", {-3, 3}}});
  CHECK(r["svg"].get<std::string>().find("<svg") == 0);
  auto q = call("/api/render",
                {{"family", kLeapfrog}, {"window", {-4, 4}}, {"subject", "quiver"}});
  CHECK(q["svg"].get<std::string>().find("class=\"vertex\"") != std::string::npos);
  call("/api/render", {{"family", kFountain}, {"window", {-3, 3}}, {"subject", "x"}}, 400);
}

TEST_CASE("errors") {
  CHECK(service::handle("/api/nope", "{}").status == 404);
  CHECK(service::handle("/api/classify", "not json").status == 400);
  CHECK(service::handle("/api/classify", "[1,2]").status == 400);
  auto missing = call("/api/classify", json::object(), 400);
  CHECK(missing["kind"] == "bad-request");
  auto parse = call("/api/classify", {{"family", "arc 0 1"}}, 400);
  CHECK(parse["kind"] == "parse");
  CHECK(parse["line"] == 1);
  call("/api/window-arcs", {{"family", kFountain}, {"window", {3, -3}}}, 400);
  call("/api/hom", {{"x", {0, 1}}, {"y", {0, 3}}}, 400);
  call("/api/hom", {{"x", "0,2"}, {"y", {0, 3}}}, 400);
}

TEST_CASE("identical requests give identical responses") {
  const std::string body = json{{"family", kSplit}, {"arc", {1, 4}}}.dump();
  CHECK(service::handle("/api/mutate", body).body == service::handle("/api/mutate", body).body);
}

TEST_CASE("requests over HTTP") {
  httplib::Server server;
  service::install_routes(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  const std::string body = json{{"x", {0, 2}}, {"y", {0, 3}}}.dump();
  auto res = client.Post("/api/hom", body, "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->body == service::handle("/api/hom", body).body);
  CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");

  auto missing = client.Post("/api/unknown", "{}", "application/json");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  server.stop();
  worker.join();
}
