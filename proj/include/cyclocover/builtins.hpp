#pragma once

#include "cyclocover/presentation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclocover {

/// circle, wedge2, trefoil, figure8, phi3.
const std::vector<std::string>& builtin_names();

/// The presentation behind a builtin, if it comes from one (phi3 does not).
std::optional<Presentation> builtin_presentation(std::string_view name, Field field);

/// Throws InputError for unknown names.
ChainComplexOverR builtin_complex(std::string_view name, Field field = Field::rationals());

} // namespace cyclocover
