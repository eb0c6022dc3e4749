#pragma once

#include <iosfwd>
#include <string>

#include "pcarr/arrangement.hpp"

namespace pcarr {

// .arr text format:
//   n <N>
//   v <vid> <c1> <c2> <sign>        sign in {+,-}
//   c <cid>: <vid> <vid> ...        cyclic crossing order along the circle
// Whitespace separated, '#' starts a comment, LF line endings.
// Circle and vertex ids may be arbitrary non-negative integers; they are
// remapped to dense 0-based ids in declaration order.

Arrangement parse_arr(std::istream& in);
Arrangement parse_arr_string(const std::string& text);
Arrangement load_arr(const std::string& path);

std::string serialize_arr(const Arrangement& a);
void save_arr(const Arrangement& a, const std::string& path);

}  // namespace pcarr
