#include "seasonal/format.hpp"

#include <charconv>

namespace seasonal {

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace seasonal
