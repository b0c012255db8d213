#include "pctrank/csv.hpp"

#include <istream>
#include <ostream>

#include "pctrank/errors.hpp"

namespace pctrank::csv {

namespace {

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t extra;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t j = 1; j <= extra; ++j) {
      if ((static_cast<unsigned char>(s[i + j]) & 0xC0) != 0x80) return false;
    }
    i += extra + 1;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::string>> read_all(std::istream& in) {
  std::string content(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
  if (!valid_utf8(content)) throw ParseError("input is not valid UTF-8");

  std::string_view text = content;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool in_quotes = false;
  bool cell_was_quoted = false;
  bool row_has_data = false;

  auto end_cell = [&] {
    row.push_back(std::move(cell));
    cell.clear();
    cell_was_quoted = false;
  };
  auto end_row = [&] {
    end_cell();
    rows.push_back(std::move(row));
    row.clear();
    row_has_data = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cell.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!cell.empty() || cell_was_quoted) {
          throw ParseError("line " + std::to_string(rows.size() + 1) +
                           ": quote inside an unquoted cell");
        }
        in_quotes = true;
        cell_was_quoted = true;
        row_has_data = true;
        break;
      case ',':
        end_cell();
        row_has_data = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        end_row();
        break;
      case '\n':
        end_row();
        break;
      default:
        if (cell_was_quoted) {
          throw ParseError("line " + std::to_string(rows.size() + 1) +
                           ": data after a closing quote");
        }
        cell.push_back(c);
        row_has_data = true;
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted cell at end of input");
  if (row_has_data || !row.empty()) end_row();
  return rows;
}

std::string escape(std::string_view cell) {
  bool needs_quotes = cell.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(cell);
  std::string out;
  out.reserve(cell.size() + 2);
  out.push_back('"');
  for (char c : cell) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << escape(cells[i]);
  }
  out << '\n';
}

}  // namespace pctrank::csv
