#pragma once

// Brute-force window suite on the polygon [0, n - 1].
//
// The enumeration below has its own crossing test and never calls the
// engine's symbolic predicates; the engine is then checked against it.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "infgon/arcs.hpp"

namespace infgon::oracle {

/// Default cap on the suite size; overridden by INFGON_ORACLE_LIMIT.
inline constexpr Int kDefaultVertexLimit = 8;
Int vertex_limit();

std::int64_t catalan(Int k);

using ArcSet = std::vector<Arc>;  ///< sorted

/// Every maximal non-crossing set of arcs with endpoints in `w`, each sorted,
/// in lexicographic order.
std::vector<ArcSet> maximal_sets(Window w);

/// Every candidate in `w` is a member or crosses a member.
bool brute_maximal(const ArcSet& members, Window w);

/// All b != a with (members \ {a}) + {b} maximal in `w`.
ArcSet brute_replacements(const ArcSet& members, Arc a, Window w);

ArcFamily as_family(const ArcSet& members);

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SuiteReport {
  Int vertices = 0;
  std::vector<std::int64_t> counts;  ///< counts[i] for n = 4 + i
  std::vector<Check> checks;

  bool passed() const;
};

/// Runs n = 4 .. max_vertices.
SuiteReport run_suite(Int max_vertices);

void print(std::ostream& os, const SuiteReport& r);

}  // namespace infgon::oracle
