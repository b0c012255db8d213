#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pctrank/percentiles.hpp"
#include "pctrank/ranking.hpp"

namespace pctrank {

// One percentile rank class: the interval [lower, upper) of percentiles it
// covers, or [lower, upper] when `upper_inclusive` (top classes).
struct RankClass {
  std::string label;
  double lower = 0.0;
  double upper = 100.0;
  bool upper_inclusive = false;

  bool contains(double p) const {
    return p >= lower && (upper_inclusive ? p <= upper : p < upper);
  }
  double width() const { return upper - lower; }
};

// A named classification scheme. Non-nested schemes partition [0, 100];
// the nested scheme (ESI-style thresholds) lets one publication satisfy
// several classes at once.
class RankClassScheme {
 public:
  static RankClassScheme pr2_10();  // <90% | 10%
  static RankClassScheme pr2_50();  // <50% | 50%+
  static RankClassScheme pr6();     // <50% | 50% | 25% | 10% | 5% | 1%
  static RankClassScheme esi6();    // nested: 50% 20% 10% 1% 0.1% 0.01%

  // Accepts the CLI spellings pr2-10, pr2-50, pr6, esi6. Throws ConfigError.
  static RankClassScheme by_name(std::string_view name);

  const std::string& name() const { return name_; }
  std::span<const RankClass> classes() const { return classes_; }
  bool nested() const { return nested_; }

  std::size_t size() const { return classes_.size(); }
  double min_width() const;
  bool equal_widths() const;

  // Index of the class whose interval contains `percentile` (non-nested only).
  std::size_t find_class(double percentile) const;

 private:
  RankClassScheme(std::string name, std::vector<RankClass> classes, bool nested);

  std::string name_;
  std::vector<RankClass> classes_;
  bool nested_ = false;
};

// How a publication whose tie group straddles a class boundary is resolved
// under crisp assignment.
enum class BoundaryPolicy {
  AssignUp,             // the highest class the group touches
  AssignDown,           // the lowest class the group touches
  MissingOnAmbiguity,   // no class at all
};

struct ClassAssignment {
  enum class Mode { Crisp, Missing, Fractional };

  std::string id;
  Mode mode = Mode::Crisp;
  std::string label;            // Crisp only
  std::vector<double> weights;  // Fractional only, parallel to scheme classes
};

// The classes a tie group's count block overlaps with positive weight, as an
// inclusive index range into scheme.classes(). A group is ambiguous exactly
// when its fractional weight vector is non-degenerate, i.e. lowest != highest.
struct TieSpan {
  std::size_t lowest = 0;
  std::size_t highest = 0;

  bool ambiguous() const { return lowest != highest; }
};

TieSpan tie_span(const TieGroup& group, const RankClassScheme& scheme, std::size_t n);

// Crisp assignment: the class containing the percentile, unless the
// publication's tie group spans a boundary, in which case the boundary
// policy decides. Non-nested schemes only.
ClassAssignment classify_crisp(const PercentileScore& score, const RankClassScheme& scheme,
                               BoundaryPolicy policy, const TieSpan& span);

// Classifies a whole ranked set, deriving each member's tie span from its
// tie group. `scores` must come from score_set() on the same ranked set.
std::vector<ClassAssignment> classify_crisp_set(const RankedSet& ranked,
                                                std::span<const PercentileScore> scores,
                                                const RankClassScheme& scheme,
                                                BoundaryPolicy policy);

// Labels of every nested threshold the percentile meets (equal to or larger
// than), ordered from the 50% class upward. Satisfying a threshold implies
// satisfying every smaller one.
std::vector<std::string> esi_membership(double percentile);
std::vector<std::string> esi_membership(const PercentileScore& score);

// Fractional (tie-proportional) assignment. On the descending count axis
// (0, n], a class covering percentiles [lo, hi) owns the count interval
// (n*(100-hi)/100, n*(100-lo)/100]; each member of a tie group occupying
// (b, b+g] gets weight overlap/g in every class. Weights per member sum to 1
// and per-class mass sums to exactly n*width/100. Non-nested schemes only.
std::vector<ClassAssignment> assign_fractional(const RankedSet& ranked,
                                               const RankClassScheme& scheme);

// Whether a scheme can be applied to a set without equivocal assignments.
//
// Two rules are checked. Size rule: a scheme with k equal classes needs
// k <= n+1; with unequal class widths the smallest width w implies an
// effective ceil(100/w)-class scheme and the set must have at least
// ceil(100/w)+1 publications. Tie rule: when genuine ties exist, the largest
// tie group g caps the usable number of equal-size classes at floor(n/g).
struct FeasibilityReport {
  std::string scheme_name;
  std::size_t n = 0;
  std::size_t largest_tie_group = 0;
  std::size_t max_equal_classes = 0;   // floor(n / largest tie group)
  std::size_t rule2_max_classes = 0;   // n + 1
  std::size_t effective_classes = 0;   // ceil(100 / smallest class width)
  std::size_t required_n = 0;          // minimum set size for this scheme
  bool feasible = false;
  std::string reason;
};

FeasibilityReport validate_feasibility(const RankedSet& ranked, const RankClassScheme& scheme);

// The feasibility verdict for a hypothetical k-equal-class partition of the
// same set (quintiles, sextiles, ...).
bool equal_classes_feasible(const RankedSet& ranked, std::size_t k);

}  // namespace pctrank
