#pragma once

// Stateless JSON service. Every request body carries the whole family
// document under "family"; nothing is kept between requests.
//
//   POST /api/validate     {family}
//   POST /api/classify     {family}
//   POST /api/window-arcs  {family, window}
//   POST /api/maximal      {family, window?}
//   POST /api/mutate       {family, arc, window?}
//   POST /api/quiver       {family, window}
//   POST /api/hom          {x, y}
//   POST /api/render       {family, window, subject?: "family" | "quiver"}
//
// Windows are {"lo": L, "hi": H} or [L, H]; arcs and coordinates are [M, N].

#include <string>
#include <string_view>
#include <vector>

namespace infgon::service {

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

const std::vector<std::string>& endpoints();

/// Pure: equal (path, body) pairs give equal responses.
Response handle(std::string_view path, std::string_view body);

/// Blocks serving on host:port. Returns false if the socket cannot be bound.
bool serve(const std::string& host, int port);

}  // namespace infgon::service
