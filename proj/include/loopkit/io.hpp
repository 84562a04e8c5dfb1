#pragma once

// The .loop text format:
//
//   # optional comment lines
//   loop N
//   N rows of N base-10 integers, row a holding a.b for b = 0..N-1
//
// Trailing whitespace is ignored. Element 0 must be the identity.

#include <filesystem>
#include <string>
#include <vector>

#include "loopkit/loop.hpp"

namespace loopkit {

// Grammar only; throws ParseError.
CayleyTable parse_loop_text(const std::string& text);
// Grammar plus loop validation.
FiniteLoop read_loop_file(const std::filesystem::path& path);
std::string serialize_loop(const CayleyTable& table);
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

// Comma separated element list such as "0,3".
std::vector<Elem> parse_element_list(const std::string& text, std::size_t order);

}  // namespace loopkit
