#pragma once

#include <string>

namespace seasonal {

// 17 significant digits, locale-independent.
std::string format_number(double value);

}  // namespace seasonal
