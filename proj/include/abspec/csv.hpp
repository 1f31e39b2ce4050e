#ifndef ABSPEC_CSV_HPP
#define ABSPEC_CSV_HPP

#include <filesystem>
#include <string>
#include <string_view>

namespace abspec {

/// Shortest decimal string that parses back to the same double (at most 17
/// significant digits).
std::string format_number(double v);

/// Writes content to a sibling temporary file and renames it over path, so
/// readers never observe a partial file. Throws IoError.
void write_file_atomically(const std::filesystem::path& path,
                           std::string_view content);

}  // namespace abspec

#endif  // ABSPEC_CSV_HPP
