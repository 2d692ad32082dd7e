#pragma once

#include <string>
#include <string_view>

#include "sumdens/integer_set.hpp"
#include "sumdens/torus_set.hpp"

namespace sumdens {

// Circle sets: {"intervals": [["p/q", "r/s"], ...]} or one "p/q r/s" pair per line.
// The parser detects the form from the first non-blank character.
std::string torus_to_json(const TorusSet& a);
std::string torus_to_lines(const TorusSet& a);
TorusSet parse_torus_set(std::string_view text);

// Integer sets: "horizon N" followed by one member per line, or "bitmap N" followed by the
// 64-bit words in order, 16 hex digits each, one word per line.
std::string integer_to_text(const FiniteIntegerSet& a);
std::string integer_to_bitmap(const FiniteIntegerSet& a);
FiniteIntegerSet parse_integer_set(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace sumdens
