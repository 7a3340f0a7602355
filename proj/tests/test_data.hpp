#pragma once

#include <string>

#include "antgls/tsplib.hpp"

namespace antgls::testing {

inline std::string data_path(const std::string& file) { return std::string(ANTGLS_DATA_DIR) + "/" + file; }

inline const Problem& eil51() {
  static const Problem p = load_problem(data_path("eil51.tsp"));
  return p;
}

}  // namespace antgls::testing
