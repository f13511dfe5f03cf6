#pragma once

#include <string>
#include <string_view>

#include "core/configuration.hpp"

namespace fmca {

// Grid text: first line n, then n rows of '+'/'-' from north (j = n-1) to
// south (j = 0). Only a single trailing newline is tolerated.
Configuration parse_grid(std::string_view text);
std::string format_grid(const Configuration& x);

Configuration read_grid_file(const std::string& path);
void write_grid_file(const Configuration& x, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fmca
