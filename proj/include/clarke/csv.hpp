#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace clarke {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Writes through a temporary file and renames it into place.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);
void write_csv(const std::filesystem::path& path, const CsvTable& table);
std::string to_csv_string(const CsvTable& table);

/// Numeric CSV with one header line. Throws ParseError on ragged rows or
/// unparsable cells.
CsvTable read_csv(const std::filesystem::path& path);

/// Reads the file and checks the header matches `expected` exactly and that
/// every row is numeric with the right width. Throws ParseError.
CsvTable validate_csv(const std::filesystem::path& path, const std::vector<std::string>& expected);

}  // namespace clarke
