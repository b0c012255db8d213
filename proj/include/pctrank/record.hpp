#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pctrank {

// One publication as read from an input file.
//
// `attributes` keeps any input columns the computation does not know about,
// in input order, so records can be written back without losing information.
struct CitationRecord {
  std::string id;
  std::int64_t citations = 0;
  std::string field;
  std::int64_t year = 0;
  std::string doctype;
  std::optional<std::int64_t> pages;
  std::optional<double> journal_metric;
  std::vector<std::pair<std::string, std::string>> attributes;

  friend bool operator==(const CitationRecord&, const CitationRecord&) = default;
};

// Grouping key of a reference set: subject field, publication year, document type.
struct GroupKey {
  std::string field;
  std::int64_t year = 0;
  std::string doctype;

  auto operator<=>(const GroupKey&) const = default;

  // Compact single-token form used as the group id in reports.
  std::string label() const;
};

// All publications sharing one group key; the universe a publication is
// normalized against.
struct ReferenceSet {
  GroupKey key;
  std::vector<CitationRecord> members;

  std::size_t size() const { return members.size(); }
};

// Partitions records into reference sets. The returned map iterates keys in
// lexicographic (field, year, doctype) order. Throws ValidationError on an
// empty input.
std::map<GroupKey, ReferenceSet> build_reference_sets(std::span<const CitationRecord> records);

}  // namespace pctrank
