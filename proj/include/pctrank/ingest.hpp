#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pctrank/record.hpp"

namespace pctrank {

enum class InputFormat {
  DelimitedTable,  // comma-separated, header line, quoted cells permitted
  JsonLines,       // one JSON object per line
};

// Picks a format from a file name: .jsonl/.ndjson mean JsonLines, everything
// else is read as a delimited table.
InputFormat guess_format(std::string_view path);

// Reads publication records from `in`, in input order. `source` names the
// stream in diagnostics (a file path, or "-" for stdin).
//
// Required columns/keys: id, citations, field, year, doctype. Optional:
// pages, journal_metric. Anything else is preserved in the record's
// attributes bag. Errors carry the 1-based data row number and the offending
// column: negative or non-integer citations, empty or duplicate id, pages < 1,
// negative journal_metric all reject the input.
std::vector<CitationRecord> parse_records(std::istream& in, InputFormat format,
                                          std::string_view source = "input");

// Writes records so that parsing the output yields the identical sequence.
void write_records(std::ostream& out, std::span<const CitationRecord> records,
                   InputFormat format);

}  // namespace pctrank
