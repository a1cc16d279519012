#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sqmv/models/model.hpp"

namespace sqmv::models {

// Names: square, disk, interval, flat-standard, ex32, ex32-grid, chain:<n>,
// flatten:<base>:<k>, product:<m1>,<m2>, grid:square:<d>, grid:disk:<d>.
// Parentheses may wrap any sub-name; a trailing @w selects the Wajsberg view
// (native SW*/DW* for square and disk). SpecError on unknown names.
Model build_model(std::string_view spec);

// The finite models every audit walks through.
const std::vector<std::string>& finite_catalog();
// The infinite mv models with their declared classes.
const std::vector<std::string>& standard_catalog();

}  // namespace sqmv::models
