#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace atlas::csv {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based physical line where the record starts
};

// RFC-4180 reader: comma separated, double-quote quoting with "" escapes, LF or CRLF
// record ends, quoted fields may span lines. A leading UTF-8 BOM is skipped.
// Throws ParseError (source, line) on an unterminated quote or stray text after a
// closing quote.
std::vector<Record> read_records(std::string_view text, std::string_view source = "<csv>");

// Quotes the field when it contains a comma, quote, CR or LF.
std::string escape_field(std::string_view field);

}  // namespace atlas::csv
