#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace spot::io {

/// Whole-file read; IoError with the path on failure.
std::string read_file(const std::filesystem::path& path);

/// File split into lines ('\n'; a trailing empty line is dropped).
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Write-to-temp-then-rename so readers never observe a half-written file.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Shortest decimal form that parses back to the same double ("%.17g" capped).
std::string format_double(double v);

double parse_double(std::string_view s);

std::string iso8601_utc_now();

}  // namespace spot::io
