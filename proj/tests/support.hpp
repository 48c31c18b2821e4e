#pragma once

#include <string>

#include "torunits/field_spec.hpp"

namespace testing {

inline torunits::Workspace suite(const std::string& name) {
  return torunits::load_workspace(std::string(TORUNITS_DATA_DIR) + "/" + name + ".toml");
}

inline const char* const suite_names[] = {"sqrt2", "sqrt5", "gaussian", "sqrt-5", "cbrt2",
                                          "real-cubic", "x4m2", "zeta5", "zeta7"};

}  // namespace testing
