#pragma once

#include "chang/spaces.hpp"

#include <string>
#include <string_view>

namespace chang {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t pos_) : std::runtime_error(msg), pos(pos_) {}
};

/* Grammar (ASCII):
 *   space := term (" v " term)*
 *   term  := "S0" | "S1" | "S2"
 *          | "M(" prime "^" int "," cell ")"        cell in {0,1}
 *          | "Ceta" | "Ct(" int ")" | "Cr(" int ")" | "C(" int "," int ")"
 * Whitespace around the wedge separator is flexible. */
Space parse_space(std::string_view text);

}  // namespace chang
