#include "csv.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "burgbounds/errors.hpp"

namespace burgbounds::csv {

namespace {

// Splits one physical line into fields. Quoted fields may contain commas and
// doubled quotes; embedded newlines are not supported by these formats.
std::vector<std::string> split_line(const std::string& line, std::size_t lineno,
                                    const std::string& path) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            if (!current.empty()) {
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": quote inside unquoted field");
            }
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (in_quotes) {
        throw ParseError(path + ":" + std::to_string(lineno) + ": unterminated quoted field");
    }
    fields.push_back(current);
    return fields;
}

}  // namespace

Table read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    Table table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_line(line, lineno, path);
        if (table.header.empty()) {
            table.header = std::move(fields);
        } else {
            table.rows.push_back({lineno, std::move(fields)});
        }
    }
    if (table.header.empty()) {
        throw ParseError(path + ": missing header row");
    }
    return table;
}

std::vector<std::size_t> resolve_columns(const Table& table,
                                         const std::vector<std::string>& expected,
                                         const std::string& path) {
    for (const auto& name : table.header) {
        if (std::find(expected.begin(), expected.end(), name) == expected.end()) {
            throw ParseError(path + ": unknown column '" + name + "'");
        }
    }
    std::vector<std::size_t> indices;
    for (const auto& name : expected) {
        auto it = std::find(table.header.begin(), table.header.end(), name);
        if (it == table.header.end()) {
            throw ParseError(path + ": missing column '" + name + "'");
        }
        indices.push_back(static_cast<std::size_t>(it - table.header.begin()));
    }
    return indices;
}

std::int64_t parse_int(const std::string& field, const std::string& where) {
    if (field.empty()) {
        throw ParseError(where + ": empty field where an integer was expected");
    }
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(field.c_str(), &end, 10);
    if (errno != 0 || end != field.c_str() + field.size()) {
        throw ParseError(where + ": unparseable integer '" + field + "'");
    }
    return v;
}

double parse_real(const std::string& field, const std::string& where) {
    if (field.empty()) {
        throw ParseError(where + ": empty field where a number was expected");
    }
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(field.c_str(), &end);
    if (errno != 0 || end != field.c_str() + field.size()) {
        throw ParseError(where + ": unparseable number '" + field + "'");
    }
    return v;
}

std::optional<std::int64_t> parse_optional_int(const std::string& field,
                                               const std::string& where) {
    if (field.empty()) return std::nullopt;
    return parse_int(field, where);
}

std::string quote_if_needed(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace burgbounds::csv
