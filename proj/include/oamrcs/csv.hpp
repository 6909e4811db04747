#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace oamrcs::csv {

/// One parsed data row with its 1-based line number in the source file.
struct Row {
    std::size_t line;
    std::vector<std::string> fields;
};

struct Table {
    std::string source;
    std::vector<std::string> header;
    std::vector<Row> rows;
};

/// Reads a comma-separated file. Blank lines and lines starting with '#' are
/// skipped; the first remaining line is the header. Fields are trimmed.
Table read(const std::filesystem::path& path);

/// Throws FormatError unless the header starts with `expected` (extra
/// trailing columns are allowed only when allow_extra is set).
void require_header(const Table& table, const std::vector<std::string_view>& expected,
                    bool allow_extra = false);

/// Strict decimal parse of a whole field; throws FormatError naming the line.
double parse_number(const Table& table, const Row& row, std::size_t column);

/// printf-style "%.*g" formatting; deterministic and locale independent.
std::string format_number(double value, int significant_digits = 9);

/// Writes `content` to `path`, throwing Error when the file cannot be opened.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace oamrcs::csv
