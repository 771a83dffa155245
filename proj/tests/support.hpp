#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "infgon/arcs.hpp"

namespace test {

using namespace infgon;

inline ArcFamily singles(std::initializer_list<Arc> arcs) {
  ArcFamily f;
  for (const auto& a : arcs) f.orbits.push_back(Orbit::single(a));
  return f;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(INFGON_FIXTURES) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace test
