#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pctrank::csv {

// Comma-separated rows, double-quote quoting, "" escapes a quote inside a
// quoted cell. Quoted cells may contain commas, quotes and newlines.
// A UTF-8 BOM at the start of the stream is skipped.
//
// Returns all rows including the header row. Throws ParseError on unbalanced
// quotes, bytes that are not valid UTF-8, or stray data after a closing quote.
std::vector<std::vector<std::string>> read_all(std::istream& in);

// Quotes a cell only when needed (comma, quote, CR or LF present).
std::string escape(std::string_view cell);

void write_row(std::ostream& out, const std::vector<std::string>& cells);

}  // namespace pctrank::csv
