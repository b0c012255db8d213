#include "pctrank/rank_classes.hpp"

#include <algorithm>
#include <cmath>

#include "pctrank/errors.hpp"
#include "pctrank/format.hpp"

namespace pctrank {

namespace {

// Weights below this are treated as zero when deciding whether a tie group
// genuinely touches a class.
constexpr double kWeightEpsilon = 1e-9;

// Count-axis interval (lo, hi] owned by one class, on the descending axis
// where the most cited publication occupies (0, 1].
struct CountInterval {
  double lo;
  double hi;
};

CountInterval count_interval(const RankClass& cls, std::size_t n) {
  const double dn = static_cast<double>(n);
  return {dn * (100.0 - cls.upper) / 100.0, dn * (100.0 - cls.lower) / 100.0};
}

std::vector<double> group_weights(const TieGroup& group, const RankClassScheme& scheme,
                                  std::size_t n) {
  const double b = static_cast<double>(group.count_before);
  const double g = static_cast<double>(group.size());
  std::vector<double> weights(scheme.size(), 0.0);
  for (std::size_t c = 0; c < scheme.size(); ++c) {
    auto iv = count_interval(scheme.classes()[c], n);
    double overlap = std::min(iv.hi, b + g) - std::max(iv.lo, b);
    weights[c] = std::max(overlap, 0.0) / g;
  }
  return weights;
}

std::size_t ceil_div_100(double width) {
  return static_cast<std::size_t>(std::ceil(100.0 / width - 1e-9));
}

}  // namespace

RankClassScheme::RankClassScheme(std::string name, std::vector<RankClass> classes, bool nested)
    : name_(std::move(name)), classes_(std::move(classes)), nested_(nested) {}

RankClassScheme RankClassScheme::pr2_10() {
  return {"PR(2,10)",
          {{"<90%", 0.0, 90.0, false}, {"10%", 90.0, 100.0, true}},
          false};
}

RankClassScheme RankClassScheme::pr2_50() {
  return {"PR(2,50)",
          {{"<50%", 0.0, 50.0, false}, {"50%+", 50.0, 100.0, true}},
          false};
}

RankClassScheme RankClassScheme::pr6() {
  return {"PR(6)",
          {{"<50%", 0.0, 50.0, false},
           {"50%", 50.0, 75.0, false},
           {"25%", 75.0, 90.0, false},
           {"10%", 90.0, 95.0, false},
           {"5%", 95.0, 99.0, false},
           {"1%", 99.0, 100.0, true}},
          false};
}

RankClassScheme RankClassScheme::esi6() {
  return {"ESI(6)",
          {{"50%", 50.0, 100.0, true},
           {"20%", 80.0, 100.0, true},
           {"10%", 90.0, 100.0, true},
           {"1%", 99.0, 100.0, true},
           {"0.1%", 99.9, 100.0, true},
           {"0.01%", 99.99, 100.0, true}},
          true};
}

RankClassScheme RankClassScheme::by_name(std::string_view name) {
  if (name == "pr2-10" || name == "PR(2,10)") return pr2_10();
  if (name == "pr2-50" || name == "PR(2,50)") return pr2_50();
  if (name == "pr6" || name == "PR(6)") return pr6();
  if (name == "esi6" || name == "ESI(6)") return esi6();
  throw ConfigError("unknown scheme \"" + std::string(name) +
                    "\" (expected pr2-10|pr2-50|pr6|esi6)");
}

double RankClassScheme::min_width() const {
  double w = 100.0;
  for (const auto& cls : classes_) w = std::min(w, cls.width());
  return w;
}

bool RankClassScheme::equal_widths() const {
  for (const auto& cls : classes_) {
    if (cls.width() != classes_.front().width()) return false;
  }
  return true;
}

std::size_t RankClassScheme::find_class(double percentile) const {
  if (nested_) throw ConfigError("nested scheme has no unique containing class");
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].contains(percentile)) return c;
  }
  throw ConfigError("percentile " + format_roundtrip(percentile) + " outside [0, 100]");
}

TieSpan tie_span(const TieGroup& group, const RankClassScheme& scheme, std::size_t n) {
  auto weights = group_weights(group, scheme, n);
  std::size_t lowest = scheme.size();
  std::size_t highest = 0;
  for (std::size_t c = 0; c < weights.size(); ++c) {
    if (weights[c] > kWeightEpsilon) {
      lowest = std::min(lowest, c);
      highest = std::max(highest, c);
    }
  }
  if (lowest == scheme.size()) {
    throw ValidationError("tie group has no class overlap; count axis inconsistent");
  }
  return {lowest, highest};
}

ClassAssignment classify_crisp(const PercentileScore& score, const RankClassScheme& scheme,
                               BoundaryPolicy policy, const TieSpan& span) {
  if (scheme.nested()) throw ConfigError("crisp assignment needs a partitioning scheme");
  ClassAssignment out;
  out.id = score.id;
  if (!span.ambiguous()) {
    out.mode = ClassAssignment::Mode::Crisp;
    out.label = scheme.classes()[scheme.find_class(score.percentile)].label;
    return out;
  }
  switch (policy) {
    case BoundaryPolicy::AssignUp:
      out.mode = ClassAssignment::Mode::Crisp;
      out.label = scheme.classes()[span.highest].label;
      break;
    case BoundaryPolicy::AssignDown:
      out.mode = ClassAssignment::Mode::Crisp;
      out.label = scheme.classes()[span.lowest].label;
      break;
    case BoundaryPolicy::MissingOnAmbiguity:
      out.mode = ClassAssignment::Mode::Missing;
      break;
  }
  return out;
}

std::vector<ClassAssignment> classify_crisp_set(const RankedSet& ranked,
                                                std::span<const PercentileScore> scores,
                                                const RankClassScheme& scheme,
                                                BoundaryPolicy policy) {
  if (scores.size() != ranked.n()) {
    throw ValidationError("scores do not match ranked set size");
  }
  std::vector<ClassAssignment> out;
  out.reserve(scores.size());
  std::size_t next = 0;
  for (const auto& group : ranked.tie_groups) {
    TieSpan span = tie_span(group, scheme, ranked.n());
    for (std::size_t i = 0; i < group.size(); ++i) {
      out.push_back(classify_crisp(scores[next++], scheme, policy, span));
    }
  }
  return out;
}

std::vector<std::string> esi_membership(double percentile) {
  std::vector<std::string> labels;
  for (const auto& cls : RankClassScheme::esi6().classes()) {
    if (percentile >= cls.lower) labels.push_back(cls.label);
  }
  return labels;
}

std::vector<std::string> esi_membership(const PercentileScore& score) {
  return esi_membership(score.percentile);
}

std::vector<ClassAssignment> assign_fractional(const RankedSet& ranked,
                                               const RankClassScheme& scheme) {
  if (scheme.nested()) throw ConfigError("fractional assignment needs a partitioning scheme");
  std::vector<ClassAssignment> out;
  out.reserve(ranked.n());
  for (const auto& group : ranked.tie_groups) {
    auto weights = group_weights(group, scheme, ranked.n());
    for (std::size_t m : group.member_indices) {
      ClassAssignment a;
      a.id = ranked.source.members[m].id;
      a.mode = ClassAssignment::Mode::Fractional;
      a.weights = weights;
      out.push_back(std::move(a));
    }
  }
  return out;
}

FeasibilityReport validate_feasibility(const RankedSet& ranked, const RankClassScheme& scheme) {
  FeasibilityReport report;
  report.scheme_name = scheme.name();
  report.n = ranked.n();
  report.largest_tie_group = ranked.largest_tie_group();
  report.max_equal_classes = report.n / report.largest_tie_group;
  report.rule2_max_classes = report.n + 1;
  report.effective_classes = ceil_div_100(scheme.min_width());

  if (scheme.nested()) {
    report.required_n = 0;
    report.feasible = true;
    report.reason = "nested thresholds: membership depends only on each publication's percentile";
    return report;
  }

  bool size_ok;
  std::string size_reason;
  if (scheme.equal_widths()) {
    report.required_n = report.effective_classes > 1 ? report.effective_classes - 1 : 1;
    size_ok = report.effective_classes <= report.rule2_max_classes;
    if (!size_ok) {
      size_reason = std::to_string(report.effective_classes) +
                    " classes exceed the publications-plus-one limit of " +
                    std::to_string(report.rule2_max_classes);
    }
  } else {
    report.required_n = report.effective_classes + 1;
    size_ok = report.n >= report.required_n;
    if (!size_ok) {
      size_reason = "needs at least " + std::to_string(report.required_n) +
                    " publications (smallest class " + format_fixed5(scheme.min_width()) +
                    "% implies " + std::to_string(report.effective_classes) +
                    " effective classes); set has " + std::to_string(report.n);
    }
  }

  // Ties only constrain the scheme when a citation count genuinely repeats.
  bool tie_ok = report.largest_tie_group < 2 ||
                report.effective_classes <= report.max_equal_classes;
  std::string tie_reason;
  if (!tie_ok) {
    tie_reason = "largest tie group (" + std::to_string(report.largest_tie_group) +
                 ") limits equal-size assignment to " + std::to_string(report.max_equal_classes) +
                 " classes; scheme needs " + std::to_string(report.effective_classes);
  }

  report.feasible = size_ok && tie_ok;
  if (report.feasible) {
    report.reason = "feasible";
  } else if (!size_ok && !tie_ok) {
    report.reason = size_reason + "; " + tie_reason;
  } else {
    report.reason = size_ok ? tie_reason : size_reason;
  }
  return report;
}

bool equal_classes_feasible(const RankedSet& ranked, std::size_t k) {
  if (k == 0) throw ConfigError("class count must be >= 1");
  const std::size_t n = ranked.n();
  if (k > n + 1) return false;
  const std::size_t g = ranked.largest_tie_group();
  if (g >= 2 && k > n / g) return false;
  return true;
}

}  // namespace pctrank
