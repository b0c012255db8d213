#include "pctrank/percentiles.hpp"

#include <charconv>
#include <cmath>

#include "pctrank/errors.hpp"
#include "pctrank/format.hpp"

namespace pctrank {

PercentileMethod PercentileMethod::cunnane(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) {
    throw ConfigError("plotting-position parameter a must be in [0, 0.5], got " +
                      format_roundtrip(alpha));
  }
  return {Estimator::Cunnane, alpha};
}

PercentileMethod PercentileMethod::parse(std::string_view selector) {
  if (selector == "a") return ecdf_inclusive();
  if (selector == "b") return ecdf_exclusive();
  if (selector == "c") return hazen();
  if (selector == "d") return blom();
  if (selector == "e") return gringorten();
  constexpr std::string_view prefix = "general:a=";
  if (selector.starts_with(prefix)) {
    std::string_view num = selector.substr(prefix.size());
    double alpha = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), alpha);
    if (ec != std::errc{} || ptr != num.data() + num.size()) {
      throw ConfigError("bad method selector \"" + std::string(selector) + "\"");
    }
    return cunnane(alpha);
  }
  throw ConfigError("unknown method \"" + std::string(selector) +
                    "\" (expected a|b|c|d|e|general:a=<value>)");
}

std::string PercentileMethod::selector() const {
  switch (estimator) {
    case Estimator::EcdfInclusive: return "a";
    case Estimator::EcdfExclusive: return "b";
    case Estimator::Hazen: return "c";
    case Estimator::Blom: return "d";
    case Estimator::Gringorten: return "e";
    case Estimator::Cunnane: return "general:a=" + format_roundtrip(alpha);
  }
  return "?";
}

double plotting_position(double i, std::size_t n, const PercentileMethod& method) {
  if (n == 0) throw ConfigError("plotting position needs n >= 1");
  const double dn = static_cast<double>(n);
  if (!(i >= 1.0 && i <= dn)) {
    throw ConfigError("rank " + format_roundtrip(i) + " outside [1, " + std::to_string(n) + "]");
  }
  switch (method.estimator) {
    case Estimator::EcdfInclusive:
      return i / dn * 100.0;
    case Estimator::EcdfExclusive:
      return (i - 1.0) / dn * 100.0;
    case Estimator::Hazen:
      return (i - 0.5) / dn * 100.0;
    case Estimator::Blom:
      return (i - 0.375) / dn * 100.0;
    case Estimator::Gringorten:
      return (i - 0.44) / (dn + 0.12) * 100.0;
    case Estimator::Cunnane: {
      const double a = method.alpha;
      if (!(a >= 0.0 && a <= 0.5)) {
        throw ConfigError("plotting-position parameter a must be in [0, 0.5]");
      }
      return (i - a) / (dn - 2.0 * a + 1.0) * 100.0;
    }
  }
  throw ConfigError("unknown estimator");
}

double invert(double percentile, bool zero_cited) {
  return zero_cited ? 100.0 : 100.0 - percentile;
}

std::vector<PercentileScore> score_set(const RankedSet& ranked, const PercentileMethod& method,
                                       TieMode tie_mode) {
  const std::size_t n = ranked.n();
  std::vector<PercentileScore> scores;
  scores.reserve(n);

  for (const auto& group : ranked.tie_groups) {
    double p = 0.0;
    const bool zero_cited = group.citations == 0;
    if (!zero_cited) {
      if (tie_mode == TieMode::RankAverage || group.size() == 1) {
        p = plotting_position(group.average_rank, n, method);
      } else {
        // Mean of the percentiles the group's integer ranks would receive.
        const std::size_t g = group.size();
        const std::size_t first = n - group.count_before - g + 1;
        double sum = 0.0;
        for (std::size_t r = first; r < first + g; ++r) {
          sum += plotting_position(static_cast<double>(r), n, method);
        }
        p = sum / static_cast<double>(g);
      }
    }
    for (std::size_t m : group.member_indices) {
      const auto& rec = ranked.source.members[m];
      scores.push_back(
          {rec.id, rec.citations, ranked.ranks[m], p, invert(p, zero_cited)});
    }
  }
  return scores;
}

}  // namespace pctrank
