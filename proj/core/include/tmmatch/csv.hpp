#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tmmatch::csv {

using Row = std::vector<std::string>;

// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are
// wrapped in quotes with embedded quotes doubled.
std::string escape(std::string_view field);
std::string format_row(const Row& fields);

struct Table {
  Row header;
  std::vector<Row> rows;
  std::vector<std::size_t> row_lines;  // 1-based physical line each row starts on
};

// Parses RFC 4180 text with a header row. Every row must have as many fields
// as the header. `source` names the input in ParseError messages.
Table parse(std::string_view text, const std::string& source = "<csv>");
Table read(const std::filesystem::path& path);

// Column position of `name` in the header, or ParseError.
std::size_t column(const Table& table, std::string_view name, const std::string& source = "<csv>");

// printf("%.*f") with the C locale.
std::string fixed(double value, int decimals);

void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace tmmatch::csv
