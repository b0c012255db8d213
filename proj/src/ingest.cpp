#include "pctrank/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "pctrank/csv.hpp"
#include "pctrank/errors.hpp"
#include "pctrank/format.hpp"

namespace pctrank {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_row(std::string_view source, std::size_t row, std::string_view column,
                           std::string_view what) {
  throw ParseError(std::string(source) + ": row " + std::to_string(row) + ": " +
                   std::string(column) + ": " + std::string(what));
}

std::int64_t parse_int(std::string_view cell, std::string_view source, std::size_t row,
                       std::string_view column) {
  std::string_view t = trim(cell);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value, 10);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    fail_row(source, row, column, "not a base-10 integer (\"" + std::string(cell) + "\")");
  }
  return value;
}

double parse_real(std::string_view cell, std::string_view source, std::size_t row,
                  std::string_view column) {
  std::string t(trim(cell));
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(t, &pos);
  } catch (const std::exception&) {
    fail_row(source, row, column, "not a number (\"" + std::string(cell) + "\")");
  }
  if (pos != t.size() || !std::isfinite(value)) {
    fail_row(source, row, column, "not a finite number (\"" + std::string(cell) + "\")");
  }
  return value;
}

void check_record(CitationRecord& rec, std::string_view source, std::size_t row,
                  std::unordered_set<std::string>& seen_ids) {
  if (rec.id.empty()) fail_row(source, row, "id", "empty id");
  if (!seen_ids.insert(rec.id).second) {
    fail_row(source, row, "id", "duplicate id \"" + rec.id + "\"");
  }
  if (rec.citations < 0) {
    fail_row(source, row, "citations",
             "negative citations (" + std::to_string(rec.citations) + ")");
  }
  if (rec.pages && *rec.pages < 1) {
    fail_row(source, row, "pages", "pages must be >= 1 (" + std::to_string(*rec.pages) + ")");
  }
  if (rec.journal_metric && *rec.journal_metric < 0.0) {
    fail_row(source, row, "journal_metric", "negative journal_metric");
  }
}

std::vector<CitationRecord> parse_csv(std::istream& in, std::string_view source) {
  auto rows = csv::read_all(in);
  if (rows.empty()) return {};

  const auto& header = rows.front();
  // Column index per known column, -1 when absent. Header match is
  // case-insensitive; unknown columns go to the attributes bag verbatim.
  int col_id = -1, col_citations = -1, col_field = -1, col_year = -1, col_doctype = -1,
      col_pages = -1, col_journal = -1;
  std::vector<std::size_t> extra_cols;
  for (std::size_t c = 0; c < header.size(); ++c) {
    std::string name = lower(trim(header[c]));
    int* slot = nullptr;
    if (name == "id") slot = &col_id;
    else if (name == "citations") slot = &col_citations;
    else if (name == "field") slot = &col_field;
    else if (name == "year") slot = &col_year;
    else if (name == "doctype") slot = &col_doctype;
    else if (name == "pages") slot = &col_pages;
    else if (name == "journal_metric") slot = &col_journal;
    if (slot) {
      if (*slot != -1) throw ParseError(std::string(source) + ": duplicate column \"" + name + "\"");
      *slot = static_cast<int>(c);
    } else {
      extra_cols.push_back(c);
    }
  }
  for (auto [idx, name] : {std::pair{col_id, "id"}, {col_citations, "citations"},
                           {col_field, "field"}, {col_year, "year"}, {col_doctype, "doctype"}}) {
    if (idx == -1) throw ParseError(std::string(source) + ": missing required column \"" +
                                    std::string(name) + "\"");
  }

  std::vector<CitationRecord> records;
  records.reserve(rows.size() - 1);
  std::unordered_set<std::string> seen_ids;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    const std::size_t row = r;  // 1-based data row number
    if (cells.size() != header.size()) {
      throw ParseError(std::string(source) + ": row " + std::to_string(row) + ": has " +
                       std::to_string(cells.size()) + " cells, header has " +
                       std::to_string(header.size()));
    }
    CitationRecord rec;
    rec.id = cells[col_id];
    rec.citations = parse_int(cells[col_citations], source, row, "citations");
    rec.field = cells[col_field];
    rec.year = parse_int(cells[col_year], source, row, "year");
    rec.doctype = cells[col_doctype];
    if (col_pages != -1 && !trim(cells[col_pages]).empty()) {
      rec.pages = parse_int(cells[col_pages], source, row, "pages");
    }
    if (col_journal != -1 && !trim(cells[col_journal]).empty()) {
      rec.journal_metric = parse_real(cells[col_journal], source, row, "journal_metric");
    }
    for (std::size_t c : extra_cols) rec.attributes.emplace_back(header[c], cells[c]);
    check_record(rec, source, row, seen_ids);
    records.push_back(std::move(rec));
  }
  return records;
}

std::int64_t json_int(const json& v, std::string_view source, std::size_t row,
                      std::string_view key) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    fail_row(source, row, key, "not an integer");
  }
  return v.get<std::int64_t>();
}

std::vector<CitationRecord> parse_jsonl(std::istream& in, std::string_view source) {
  std::vector<CitationRecord> records;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    ++row;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      fail_row(source, row, "line", std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) fail_row(source, row, "line", "not a JSON object");

    CitationRecord rec;
    for (auto key : {"id", "citations", "field", "year", "doctype"}) {
      if (!obj.contains(key)) fail_row(source, row, key, "missing required key");
    }
    if (!obj["id"].is_string()) fail_row(source, row, "id", "not a string");
    rec.id = obj["id"].get<std::string>();
    rec.citations = json_int(obj["citations"], source, row, "citations");
    if (!obj["field"].is_string()) fail_row(source, row, "field", "not a string");
    rec.field = obj["field"].get<std::string>();
    rec.year = json_int(obj["year"], source, row, "year");
    if (!obj["doctype"].is_string()) fail_row(source, row, "doctype", "not a string");
    rec.doctype = obj["doctype"].get<std::string>();
    if (obj.contains("pages") && !obj["pages"].is_null()) {
      rec.pages = json_int(obj["pages"], source, row, "pages");
    }
    if (obj.contains("journal_metric") && !obj["journal_metric"].is_null()) {
      const auto& v = obj["journal_metric"];
      if (!v.is_number()) fail_row(source, row, "journal_metric", "not a number");
      rec.journal_metric = v.get<double>();
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      static const std::unordered_set<std::string> known = {
          "id", "citations", "field", "year", "doctype", "pages", "journal_metric"};
      if (!known.contains(it.key())) rec.attributes.emplace_back(it.key(), it.value().dump());
    }
    check_record(rec, source, row, seen_ids);
    records.push_back(std::move(rec));
  }
  return records;
}

void write_csv(std::ostream& out, std::span<const CitationRecord> records) {
  bool any_pages = std::any_of(records.begin(), records.end(),
                               [](const auto& r) { return r.pages.has_value(); });
  bool any_journal = std::any_of(records.begin(), records.end(),
                                 [](const auto& r) { return r.journal_metric.has_value(); });
  std::vector<std::string> extra_keys;
  for (const auto& rec : records) {
    for (const auto& [key, value] : rec.attributes) {
      if (std::find(extra_keys.begin(), extra_keys.end(), key) == extra_keys.end()) {
        extra_keys.push_back(key);
      }
    }
  }

  std::vector<std::string> row = {"id", "citations", "field", "year", "doctype"};
  if (any_pages) row.push_back("pages");
  if (any_journal) row.push_back("journal_metric");
  row.insert(row.end(), extra_keys.begin(), extra_keys.end());
  csv::write_row(out, row);

  for (const auto& rec : records) {
    row = {rec.id, std::to_string(rec.citations), rec.field, std::to_string(rec.year),
           rec.doctype};
    if (any_pages) row.push_back(rec.pages ? std::to_string(*rec.pages) : "");
    if (any_journal) {
      row.push_back(rec.journal_metric ? format_roundtrip(*rec.journal_metric) : "");
    }
    for (const auto& key : extra_keys) {
      auto it = std::find_if(rec.attributes.begin(), rec.attributes.end(),
                             [&](const auto& kv) { return kv.first == key; });
      row.push_back(it != rec.attributes.end() ? it->second : "");
    }
    csv::write_row(out, row);
  }
}

void write_jsonl(std::ostream& out, std::span<const CitationRecord> records) {
  for (const auto& rec : records) {
    ordered_json obj;
    obj["id"] = rec.id;
    obj["citations"] = rec.citations;
    obj["field"] = rec.field;
    obj["year"] = rec.year;
    obj["doctype"] = rec.doctype;
    if (rec.pages) obj["pages"] = *rec.pages;
    if (rec.journal_metric) obj["journal_metric"] = *rec.journal_metric;
    for (const auto& [key, value] : rec.attributes) obj[key] = json::parse(value);
    out << obj.dump() << '\n';
  }
}

}  // namespace

InputFormat guess_format(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && lower(path.substr(path.size() - suffix.size())) == suffix;
  };
  if (ends_with(".jsonl") || ends_with(".ndjson")) return InputFormat::JsonLines;
  return InputFormat::DelimitedTable;
}

std::vector<CitationRecord> parse_records(std::istream& in, InputFormat format,
                                          std::string_view source) {
  switch (format) {
    case InputFormat::DelimitedTable:
      return parse_csv(in, source);
    case InputFormat::JsonLines:
      return parse_jsonl(in, source);
  }
  throw ConfigError("unknown input format");
}

void write_records(std::ostream& out, std::span<const CitationRecord> records,
                   InputFormat format) {
  switch (format) {
    case InputFormat::DelimitedTable:
      write_csv(out, records);
      return;
    case InputFormat::JsonLines:
      write_jsonl(out, records);
      return;
  }
  throw ConfigError("unknown input format");
}

std::string GroupKey::label() const {
  return field + "/" + std::to_string(year) + "/" + doctype;
}

std::map<GroupKey, ReferenceSet> build_reference_sets(std::span<const CitationRecord> records) {
  if (records.empty()) throw ValidationError("no records");
  std::map<GroupKey, ReferenceSet> sets;
  for (const auto& rec : records) {
    GroupKey key{rec.field, rec.year, rec.doctype};
    auto [it, inserted] = sets.try_emplace(key);
    if (inserted) it->second.key = key;
    it->second.members.push_back(rec);
  }
  return sets;
}

}  // namespace pctrank
