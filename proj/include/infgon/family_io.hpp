#pragma once

// The family description language.
//
//   infgon/1                       # optional version header
//   arc M N                        # a single arc
//   orbit M N dl DL dr DR [count K] # (M + k*DL, N + k*DR), infinite without count
//   remove M N                     # drop one generated arc
//
// One statement per line; '#' starts a comment.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "infgon/arcs.hpp"

namespace infgon {

inline constexpr std::string_view kFormatHeader = "infgon/1";

struct Statement {
  enum class Kind { Arc, Orbit, Remove };

  Kind kind = Kind::Arc;
  Orbit orbit;  ///< Arc and Orbit statements
  Arc arc;      ///< Remove statements
  std::size_t line = 0;

  bool operator==(const Statement&) const = default;
};

struct FamilyDocument {
  std::string header{kFormatHeader};
  std::vector<Statement> statements;
};

/// Syntax only; throws ParseError.
FamilyDocument parse_document(std::string_view text);

/// Declaration-order text of a document.
std::string write_document(const FamilyDocument& doc);

/// Builds and validates the family; failures carry the offending line.
ArcFamily to_family(const FamilyDocument& doc);

/// parse_document + to_family.
ArcFamily parse_family(std::string_view text);

/// Canonical text: orbits sorted by (base, dl, dr, count), then removals.
std::string serialize_family(const ArcFamily& f);

}  // namespace infgon
