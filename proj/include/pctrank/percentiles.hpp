#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pctrank/ranking.hpp"

namespace pctrank {

// Plotting-position estimators mapping a rank i in a set of size n to a
// percentile on the 0-100 scale.
enum class Estimator {
  EcdfInclusive,  // i/n                 selector "a"
  EcdfExclusive,  // (i-1)/n             selector "b"
  Hazen,          // (i-0.5)/n           selector "c"
  Blom,           // (i-0.375)/n         selector "d"
  Gringorten,     // (i-0.44)/(n+0.12)   selector "e"
  Cunnane,        // (i-a)/(n-2a+1), a in [0, 0.5]   selector "general:a=<a>"
};

struct PercentileMethod {
  Estimator estimator = Estimator::Hazen;
  double alpha = 0.5;  // Cunnane only

  static PercentileMethod ecdf_inclusive() { return {Estimator::EcdfInclusive, 0.0}; }
  static PercentileMethod ecdf_exclusive() { return {Estimator::EcdfExclusive, 0.0}; }
  static PercentileMethod hazen() { return {Estimator::Hazen, 0.0}; }
  static PercentileMethod blom() { return {Estimator::Blom, 0.0}; }
  static PercentileMethod gringorten() { return {Estimator::Gringorten, 0.0}; }
  static PercentileMethod cunnane(double alpha);

  // Parses a CLI selector: "a".."e" or "general:a=<value>".
  static PercentileMethod parse(std::string_view selector);
  std::string selector() const;
};

// How a group of tied publications receives its percentile.
enum class TieMode {
  RankAverage,        // percentile of the shared average rank (default)
  PercentileAverage,  // mean of the percentiles of the integer ranks the
                      // group would occupy
};

// Evaluates the estimator at rank `i` for a set of size `n`. `i` may be
// fractional (an average rank). Throws ConfigError when i is outside [1, n]
// or a Cunnane alpha is outside [0, 0.5].
double plotting_position(double i, std::size_t n, const PercentileMethod& method);

// Percentile of one publication within its reference set, with the inverted
// (100 - p) companion value. Zero-cited publications are pinned to
// percentile 0 / inverted 100 whatever the method or tie mode.
struct PercentileScore {
  std::string id;
  std::int64_t citations = 0;
  double rank = 0.0;
  double percentile = 0.0;
  double inverted = 0.0;

  bool zero_cited() const { return citations == 0; }
};

// Scores every member of a ranked set. Output order follows the ranked
// ordering: most cited first, ids ascending inside residual tie groups.
std::vector<PercentileScore> score_set(const RankedSet& ranked, const PercentileMethod& method,
                                       TieMode tie_mode = TieMode::RankAverage);

// 100 - p, except zero-cited publications are always 100.
double invert(double percentile, bool zero_cited);

}  // namespace pctrank
