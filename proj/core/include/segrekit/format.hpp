#pragma once

#include <string>
#include <string_view>

#include "segrekit/scalars.hpp"

namespace segre {

/// Expanded human form, highest power first, e.g. "(1/2)*d^2+(9/2)*d+10".
std::string to_string(const PolyD& p, std::string_view var = "d");
std::string to_string(const FracD& f);
std::string to_string(const PolyT& q);

/// Factored form c*(d+k1)*(d+k2)... when p splits into integer-rooted linear
/// factors (roots searched in a small window), otherwise the expanded form.
/// Example: -(1/2)*(d+4)*(d+5).
std::string to_factored_string(const PolyD& p, std::string_view var = "d");

}  // namespace segre
