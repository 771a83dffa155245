#pragma once

#include <httplib.h>

namespace infgon::service {

/// Registers the /api routes (and CORS preflight) on `server`.
void install_routes(httplib::Server& server);

}  // namespace infgon::service
