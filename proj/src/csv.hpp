#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace burgbounds::csv {

struct Row {
    std::size_t line = 0;  // 1-based physical line of the row start
    std::vector<std::string> fields;
};

struct Table {
    std::vector<std::string> header;
    std::vector<Row> rows;
};

// Comma-separated values with a mandatory header row. Accepts double-quoted
// fields with "" escapes; tolerates CRLF line endings. Empty lines between
// records are skipped.
Table read_file(const std::string& path);

// Maps the header to the expected column names (order-insensitive) and fails
// on unknown or missing columns. Returns expected-name -> field index.
std::vector<std::size_t> resolve_columns(const Table& table,
                                         const std::vector<std::string>& expected,
                                         const std::string& path);

// Strict numeric field parsers; `where` names the file/line for messages.
std::int64_t parse_int(const std::string& field, const std::string& where);
double parse_real(const std::string& field, const std::string& where);
std::optional<std::int64_t> parse_optional_int(const std::string& field,
                                               const std::string& where);

std::string quote_if_needed(const std::string& field);

}  // namespace burgbounds::csv
