#include "infgon/http.hpp"
#include "infgon/service.hpp"

namespace infgon::service {

void install_routes(httplib::Server& server) {
  for (const auto& path : endpoints()) {
    server.Post(path, [path](const httplib::Request& req, httplib::Response& res) {
      const Response r = handle(path, req.body);
      res.status = r.status;
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_content(r.body, r.content_type);
    });
  }
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

bool serve(const std::string& host, int port) {
  httplib::Server server;
  install_routes(server);
  return server.listen(host, port);
}

}  // namespace infgon::service
