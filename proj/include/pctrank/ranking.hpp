#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pctrank/record.hpp"

namespace pctrank {

// Secondary sort keys applied among publications with equal citation counts.
// Both order from highest to lowest value.
enum class TieBreakKey {
  CitationsPerPage,  // citations / pages
  JournalMetric,     // journal prestige score
};

std::string to_string(TieBreakKey key);

// Ordered covariate keys consulted, in order, only inside equal-citation
// groups. An empty chain is pure citation ranking.
struct TieBreakChain {
  std::vector<TieBreakKey> keys;

  bool empty() const { return keys.empty(); }
};

// A maximal run of members that remain tied after the full tie-break chain.
// Groups are ordered from most to least cited; `count_before` is the number
// of members in all more-cited groups, so on the descending count axis the
// group occupies (count_before, count_before + size].
struct TieGroup {
  std::int64_t citations = 0;
  std::vector<std::size_t> member_indices;  // into the source set, id-sorted
  double average_rank = 0.0;                // ascending convention, n = most cited
  std::size_t count_before = 0;

  std::size_t size() const { return member_indices.size(); }
};

// A reference set with average ranks assigned. Rank i runs ascending from 1
// (fewest citations) to n (most citations); tied members share the mean of
// the integer ranks they would occupy, so the rank sum stays n(n+1)/2.
struct RankedSet {
  ReferenceSet source;
  std::vector<double> ranks;        // parallel to source.members
  std::vector<TieGroup> tie_groups;  // descending citation order

  std::size_t n() const { return source.members.size(); }
  std::size_t largest_tie_group() const;
};

// Per-member view of the ordering actually used, for auditing how ties were
// resolved. `chain_values` holds the covariate scores consulted for this
// member, one per chain key that was needed; members never compared on a
// covariate have an empty vector.
struct EffectiveScore {
  std::size_t member_index = 0;
  std::string id;
  std::int64_t citations = 0;
  std::vector<double> chain_values;
};

// Computes the effective ordering of a set: primary order by citations,
// refined within equal-citation groups by the chain keys in order. Returned
// in descending effective order. Throws ValidationError, naming the member
// and covariate, if a chain key is consulted for a group in which some member
// lacks the covariate.
std::vector<EffectiveScore> effective_scores(const ReferenceSet& set,
                                             const TieBreakChain& chain = {});

// Assigns average ranks per the effective ordering. Members still tied after
// the full chain share one average rank. Output does not depend on the input
// order of `set.members`.
RankedSet rank_with_ties(const ReferenceSet& set, const TieBreakChain& chain = {});

}  // namespace pctrank
