#pragma once

// JSON views of engine results, shared by `--json` output and the service.
// Keys are emitted in sorted order, so equal inputs give equal bytes.

#include <json.hpp>

#include "infgon/arcs.hpp"
#include "infgon/homcalc.hpp"
#include "infgon/mutation.hpp"
#include "infgon/quiver.hpp"
#include "infgon/triangulation.hpp"

namespace infgon::report {

using Json = nlohmann::json;

Json to_json(Arc a);
Json to_json(Ind x);
Json to_json(Window w);
Json to_json(const ArcFamily& f);
Json to_json(const Validation& v);
Json to_json(const Classification& c);
Json to_json(const MaximalityVerdict& v);
Json to_json(const GlobalCertificate& c);
Json to_json(const FFVerdict& v);
Json to_json(const ExchangeSides& s);
Json to_json(const Quiver& q);
Json to_json(const Triangle& t);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace infgon::report
