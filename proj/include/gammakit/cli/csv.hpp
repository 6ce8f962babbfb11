#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gammakit::cli {

/// Quotes a field when it holds a comma, quote, CR or LF.
std::string csv_field(std::string_view text);
/// One CRLF-terminated record.
std::string csv_row(const std::vector<std::string>& fields);
std::string csv_row(std::initializer_list<std::string> fields);

/// Writes to a sibling temporary file and renames it over `path`, so
/// readers never see a partial file. Throws std::runtime_error on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace gammakit::cli
