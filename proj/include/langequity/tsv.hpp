#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace langequity::tsv {

/// One data row of a tab-delimited file, with its 1-based source line
/// number for diagnostics.
struct Row {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

/// Reads a UTF-8 tab-delimited file. Blank lines and lines starting with
/// '#' are skipped. Throws Errc::IoError if the file cannot be opened.
std::vector<Row> read_file(const std::filesystem::path& path);

/// Same splitting rules applied to an in-memory buffer (used by tests).
std::vector<Row> read_string(std::string_view text);

std::vector<std::string> split_fields(std::string_view line, char sep = '\t');

/// Splits a pipe-separated list field ("a|b|c"); empty field -> empty list.
std::vector<std::string> split_list(std::string_view field);
std::string join_list(const std::vector<std::string>& items);

/// Parses with full validation; throws Errc::ParseError naming `what` and
/// the line on failure.
double parse_double(std::string_view field, std::size_t line, std::string_view what);
long long parse_int(std::string_view field, std::size_t line, std::string_view what);

/// Shortest round-trip decimal form of v (used when rewriting data files).
std::string format_double(double v);

std::string ascii_lower(std::string_view s);

} // namespace langequity::tsv
