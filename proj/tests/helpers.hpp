#pragma once

#include <string>

#include "primrose/instance_io.hpp"

namespace test_helpers {

inline std::string data_path(const std::string& name) {
  return std::string(PRIMROSE_DATA_DIR) + "/" + name;
}

inline primrose::Instance fixture(const std::string& name) {
  return primrose::load_instance(data_path(name));
}

}  // namespace test_helpers
