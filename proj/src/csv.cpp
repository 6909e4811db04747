#include "oamrcs/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "oamrcs/error.hpp"

namespace oamrcs::csv {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.emplace_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

}  // namespace

Table read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    Table table;
    table.source = path.string();
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        if (!have_header) {
            table.header = split(body);
            have_header = true;
        } else {
            table.rows.push_back({line_no, split(body)});
        }
    }
    if (!have_header) {
        throw FormatError(table.source, 0, "missing header line");
    }
    return table;
}

void require_header(const Table& table, const std::vector<std::string_view>& expected,
                    bool allow_extra) {
    bool ok = table.header.size() >= expected.size() &&
              (allow_extra || table.header.size() == expected.size());
    for (std::size_t i = 0; ok && i < expected.size(); ++i) {
        ok = table.header[i] == expected[i];
    }
    if (!ok) {
        std::string want;
        for (const auto& e : expected) {
            want += (want.empty() ? "" : ",") + std::string(e);
        }
        throw FormatError(table.source, 1, "expected header '" + want + "'");
    }
}

double parse_number(const Table& table, const Row& row, std::size_t column) {
    if (column >= row.fields.size()) {
        throw FormatError(table.source, row.line,
                          "row has " + std::to_string(row.fields.size()) + " fields, expected at least " +
                              std::to_string(column + 1));
    }
    const std::string& field = row.fields[column];
    double value = 0.0;
    const char* first = field.data();
    const char* last = first + field.size();
    if (!field.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw FormatError(table.source, row.line,
                          "column '" + (column < table.header.size() ? table.header[column] : "?") +
                              "': not a finite number: '" + field + "'");
    }
    return value;
}

std::string format_number(double value, int significant_digits) {
    if (value == 0.0) {
        value = 0.0;  // drop the sign of negative zero
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw Error("write failed for '" + path.string() + "'");
    }
}

}  // namespace oamrcs::csv
