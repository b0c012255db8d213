#include "pctrank/ranking.hpp"

#include <algorithm>

#include "pctrank/errors.hpp"

namespace pctrank {

namespace {

// A run of members tied on everything consulted so far, with the covariate
// values each member was compared on.
struct Run {
  std::vector<std::size_t> members;                // indices into set.members
  std::vector<std::vector<double>> chain_values;   // parallel to members
};

double covariate_value(const CitationRecord& rec, TieBreakKey key) {
  switch (key) {
    case TieBreakKey::CitationsPerPage:
      return static_cast<double>(rec.citations) / static_cast<double>(*rec.pages);
    case TieBreakKey::JournalMetric:
      return *rec.journal_metric;
  }
  throw ConfigError("unknown tie-break key");
}

bool covariate_present(const CitationRecord& rec, TieBreakKey key) {
  switch (key) {
    case TieBreakKey::CitationsPerPage:
      return rec.pages.has_value();
    case TieBreakKey::JournalMetric:
      return rec.journal_metric.has_value();
  }
  return false;
}

// Splits a tied run by the chain key at `depth`, recursing until the chain is
// exhausted or the run is a singleton. Final runs are appended in descending
// effective order.
void refine(const ReferenceSet& set, const TieBreakChain& chain, std::size_t depth, Run run,
            std::vector<Run>& out) {
  if (run.members.size() < 2 || depth == chain.keys.size()) {
    out.push_back(std::move(run));
    return;
  }
  TieBreakKey key = chain.keys[depth];
  for (std::size_t m : run.members) {
    if (!covariate_present(set.members[m], key)) {
      throw ValidationError("tie-break covariate \"" + to_string(key) +
                            "\" missing for publication \"" + set.members[m].id + "\"");
    }
  }
  std::vector<std::size_t> order(run.members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<double> values(run.members.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = covariate_value(set.members[run.members[i]], key);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t stop = start + 1;
    while (stop < order.size() && values[order[stop]] == values[order[start]]) ++stop;
    Run sub;
    for (std::size_t i = start; i < stop; ++i) {
      sub.members.push_back(run.members[order[i]]);
      auto vals = run.chain_values[order[i]];
      vals.push_back(values[order[i]]);
      sub.chain_values.push_back(std::move(vals));
    }
    refine(set, chain, depth + 1, std::move(sub), out);
    start = stop;
  }
}

// Descending effective ordering of a set as final tied runs.
std::vector<Run> ordered_runs(const ReferenceSet& set, const TieBreakChain& chain) {
  if (set.members.empty()) throw ValidationError("reference set is empty");

  std::vector<std::size_t> order(set.members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = set.members[a];
    const auto& rb = set.members[b];
    if (ra.citations != rb.citations) return ra.citations > rb.citations;
    if (ra.id != rb.id) return ra.id < rb.id;
    return a < b;
  });

  std::vector<Run> runs;
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t stop = start + 1;
    while (stop < order.size() &&
           set.members[order[stop]].citations == set.members[order[start]].citations) {
      ++stop;
    }
    Run run;
    for (std::size_t i = start; i < stop; ++i) {
      run.members.push_back(order[i]);
      run.chain_values.emplace_back();
    }
    refine(set, chain, 0, std::move(run), runs);
    start = stop;
  }
  return runs;
}

}  // namespace

std::string to_string(TieBreakKey key) {
  switch (key) {
    case TieBreakKey::CitationsPerPage:
      return "citations-per-page";
    case TieBreakKey::JournalMetric:
      return "journal-metric";
  }
  return "?";
}

std::size_t RankedSet::largest_tie_group() const {
  std::size_t largest = 0;
  for (const auto& group : tie_groups) largest = std::max(largest, group.size());
  return largest;
}

std::vector<EffectiveScore> effective_scores(const ReferenceSet& set, const TieBreakChain& chain) {
  std::vector<EffectiveScore> result;
  result.reserve(set.members.size());
  for (const auto& run : ordered_runs(set, chain)) {
    for (std::size_t i = 0; i < run.members.size(); ++i) {
      const auto& rec = set.members[run.members[i]];
      result.push_back({run.members[i], rec.id, rec.citations, run.chain_values[i]});
    }
  }
  return result;
}

RankedSet rank_with_ties(const ReferenceSet& set, const TieBreakChain& chain) {
  auto runs = ordered_runs(set, chain);
  const std::size_t n = set.members.size();

  RankedSet ranked;
  ranked.source = set;
  ranked.ranks.assign(n, 0.0);
  ranked.tie_groups.reserve(runs.size());

  std::size_t count_before = 0;
  for (auto& run : runs) {
    const std::size_t g = run.members.size();
    // The group occupies descending positions count_before+1 .. count_before+g,
    // i.e. ascending ranks n-count_before-g+1 .. n-count_before.
    const double average_rank =
        static_cast<double>(n - count_before) - static_cast<double>(g - 1) / 2.0;

    TieGroup group;
    group.citations = set.members[run.members.front()].citations;
    group.member_indices = std::move(run.members);
    group.average_rank = average_rank;
    group.count_before = count_before;
    for (std::size_t m : group.member_indices) ranked.ranks[m] = average_rank;
    count_before += g;
    ranked.tie_groups.push_back(std::move(group));
  }
  return ranked;
}

}  // namespace pctrank
