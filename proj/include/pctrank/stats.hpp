#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pctrank/percentiles.hpp"
#include "pctrank/rank_classes.hpp"

namespace pctrank {

// Observed share of one class against the share a random draw would produce
// (the class width). `mass` is the publication count under crisp assignment
// or the summed fractional weight.
struct ClassShare {
  std::string label;
  double mass = 0.0;
  double observed_share = 0.0;  // percent of the group's n
  double expected_share = 0.0;  // percent, equals the class width
  double deviation = 0.0;       // observed - expected
};

struct ClassShareReport {
  std::string group;
  std::string scheme;
  std::size_t n = 0;
  std::vector<ClassShare> shares;    // scheme class order
  std::size_t missing_count = 0;     // excluded from every class numerator
  double missing_share = 0.0;
};

// Aggregates one group's assignments. All assignments must be against
// `scheme`; a crisp label not in the scheme or a weight vector of the wrong
// arity is rejected (ValidationError). With no missing assignments the
// observed shares of a partitioning scheme sum to 100.
ClassShareReport class_shares(std::span<const ClassAssignment> assignments,
                              const RankClassScheme& scheme, std::size_t n);

// Share of a group's publications meeting each nested threshold.
ClassShareReport esi_shares(std::span<const PercentileScore> scores, std::size_t n);

// z and p-values for an observed class proportion against an expected one.
// The exact binomial p-value is two-sided by summing every outcome whose
// probability does not exceed the observed outcome's, and is only defined
// for integer counts.
struct ProportionTestResult {
  double observed = 0.0;  // count, or fractional mass
  std::size_t n = 0;
  double p0 = 0.0;
  double z = 0.0;
  double p_normal = 0.0;
  std::optional<double> p_exact;
};

ProportionTestResult proportion_test(double observed, std::size_t n, double p0);

// Standard normal CDF.
double normal_cdf(double x);

// Box-plot style summary: quartiles by linear interpolation between order
// statistics at position 1+(n-1)q, adjacent values the most extreme sample
// points within 1.5 IQR of the quartiles. sd uses the n-1 denominator
// (0 when n == 1).
struct DistributionSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double lower_adjacent = 0.0;
  double upper_adjacent = 0.0;
};

DistributionSummary distribution_summary(std::span<const double> values);

}  // namespace pctrank
