#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "noosphere/lifeca.hpp"

namespace noosphere {

// Plain-text patterns: rows of '.' (dead) and '#' (alive), all the same
// length. Lines starting with '!' are comments; blank lines before the first
// row and after the last are ignored. A toroidal grid takes the file's
// dimensions; an unbounded grid places the top-left character at (0, 0).
Grid parse_pattern(std::string_view text, Boundary boundary = Boundary::kToroidal);
Grid read_pattern_file(const std::filesystem::path& path,
                       Boundary boundary = Boundary::kToroidal);

// Torus: the whole grid. Unbounded: the bounding box, or nothing if empty.
std::string format_pattern(const Grid& grid);

}  // namespace noosphere
