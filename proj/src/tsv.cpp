#include "langequity/tsv.hpp"

#include "langequity/errors.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

namespace langequity::tsv {

namespace {

std::vector<Row> parse_lines(std::istream& in) {
    std::vector<Row> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        rows.push_back(Row{lineno, split_fields(line)});
    }
    return rows;
}

} // namespace

std::vector<Row> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::IoError, "cannot open " + path.string());
    return parse_lines(in);
}

std::vector<Row> read_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_lines(in);
}

std::vector<std::string> split_fields(std::string_view line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

std::vector<std::string> split_list(std::string_view field) {
    if (field.empty()) return {};
    std::vector<std::string> items = split_fields(field, '|');
    std::erase_if(items, [](const std::string& s) { return s.empty(); });
    return items;
}

std::string join_list(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += '|';
        out += items[i];
    }
    return out;
}

double parse_double(std::string_view field, std::size_t line, std::string_view what) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    // from_chars accepts "nan" and "inf"; neither is valid data here.
    if (ec != std::errc{} || ptr != last || field.empty() || !std::isfinite(value))
        raise(Errc::ParseError,
              "line " + std::to_string(line) + ": invalid " + std::string(what) + " '" +
                  std::string(field) + "'");
    return value;
}

long long parse_int(std::string_view field, std::size_t line, std::string_view what) {
    long long value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty())
        raise(Errc::ParseError,
              "line " + std::to_string(line) + ": invalid " + std::string(what) + " '" +
                  std::string(field) + "'");
    return value;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace langequity::tsv
