#pragma once

#include <charconv>
#include <filesystem>
#include <string>

namespace loadgen {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

double parse_double(const std::string& text);

/// Writes to a sibling temp file, then renames over the target.
void atomic_write(const std::filesystem::path& file,
                  const std::string& content);

std::string read_file(const std::filesystem::path& file);

}  // namespace loadgen
