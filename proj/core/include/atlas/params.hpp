#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "atlas/layout.hpp"

namespace atlas {

// One row of the layout parameter table shared by the CLI (--set key=value) and the
// HTTP API (query parameters).
struct LayoutParamInfo {
  std::string name;
  std::string default_value;
  std::string description;
};

const std::vector<LayoutParamInfo>& layout_param_table();

// Assigns one named parameter from text. Throws InvalidArgument on an unknown name or a
// value that does not parse.
void set_layout_param(SimulationParams& sim, RadialParams& radial, std::string_view name, std::string_view value);

}  // namespace atlas
