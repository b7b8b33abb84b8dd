#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "ndt/digraph.hpp"

namespace ndt {

// Text format:
//   # comment lines anywhere
//   p ndt <n> <m>
//   a <tail> <head>      (exactly m lines, 0-based ids)
// Blank lines are ignored. Throws InputError with a line number on bad input.
Digraph parse_digraph(std::string_view text);
Digraph parse_digraph(std::istream& in);

void write_digraph(std::ostream& out, const Digraph& d, std::string_view comment = {});
std::string format_digraph(const Digraph& d, std::string_view comment = {});

// 64-bit FNV-1a of the raw input bytes, as 16 lowercase hex digits.
std::string fnv1a_digest(std::string_view bytes);

}  // namespace ndt
