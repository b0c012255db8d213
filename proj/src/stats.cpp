#include "pctrank/stats.hpp"

#include <algorithm>
#include <cmath>

#include "pctrank/errors.hpp"

namespace pctrank {

namespace {

std::size_t label_index(const RankClassScheme& scheme, const std::string& label) {
  auto classes = scheme.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].label == label) return c;
  }
  throw ValidationError("assignment label \"" + label + "\" is not a class of scheme " +
                        scheme.name());
}

// Linear interpolation between order statistics at 1-based position 1+(n-1)q.
double interpolated_quantile(const std::vector<double>& sorted, double q) {
  const std::size_t n = sorted.size();
  const double pos = 1.0 + (static_cast<double>(n) - 1.0) * q;
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  if (lo >= n) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo - 1] + frac * (sorted[lo] - sorted[lo - 1]);
}

double log_binomial_pmf(std::size_t n, std::size_t k, double p0) {
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  return std::lgamma(dn + 1.0) - std::lgamma(dk + 1.0) - std::lgamma(dn - dk + 1.0) +
         dk * std::log(p0) + (dn - dk) * std::log1p(-p0);
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

ClassShareReport class_shares(std::span<const ClassAssignment> assignments,
                              const RankClassScheme& scheme, std::size_t n) {
  if (scheme.nested()) throw ConfigError("class_shares needs a partitioning scheme");
  if (n == 0) throw ValidationError("class_shares needs n >= 1");

  std::vector<double> mass(scheme.size(), 0.0);
  std::size_t missing = 0;
  for (const auto& a : assignments) {
    switch (a.mode) {
      case ClassAssignment::Mode::Crisp:
        mass[label_index(scheme, a.label)] += 1.0;
        break;
      case ClassAssignment::Mode::Missing:
        ++missing;
        break;
      case ClassAssignment::Mode::Fractional: {
        if (a.weights.size() != scheme.size()) {
          throw ValidationError("assignment for \"" + a.id + "\" has " +
                                std::to_string(a.weights.size()) + " weights, scheme " +
                                scheme.name() + " has " + std::to_string(scheme.size()) +
                                " classes");
        }
        for (std::size_t c = 0; c < mass.size(); ++c) mass[c] += a.weights[c];
        break;
      }
    }
  }

  ClassShareReport report;
  report.scheme = scheme.name();
  report.n = n;
  report.missing_count = missing;
  report.missing_share = static_cast<double>(missing) / static_cast<double>(n) * 100.0;
  for (std::size_t c = 0; c < scheme.size(); ++c) {
    const auto& cls = scheme.classes()[c];
    ClassShare share;
    share.label = cls.label;
    share.mass = mass[c];
    share.observed_share = mass[c] / static_cast<double>(n) * 100.0;
    share.expected_share = cls.width();
    share.deviation = share.observed_share - share.expected_share;
    report.shares.push_back(std::move(share));
  }
  return report;
}

ClassShareReport esi_shares(std::span<const PercentileScore> scores, std::size_t n) {
  if (n == 0) throw ValidationError("esi_shares needs n >= 1");
  auto scheme = RankClassScheme::esi6();
  ClassShareReport report;
  report.scheme = scheme.name();
  report.n = n;
  for (const auto& cls : scheme.classes()) {
    ClassShare share;
    share.label = cls.label;
    for (const auto& s : scores) {
      if (s.percentile >= cls.lower) share.mass += 1.0;
    }
    share.observed_share = share.mass / static_cast<double>(n) * 100.0;
    share.expected_share = cls.width();
    share.deviation = share.observed_share - share.expected_share;
    report.shares.push_back(std::move(share));
  }
  return report;
}

ProportionTestResult proportion_test(double observed, std::size_t n, double p0) {
  if (n == 0) throw ConfigError("proportion test needs n >= 1");
  if (!(p0 > 0.0 && p0 < 1.0)) throw ConfigError("null proportion must be in (0, 1)");
  if (!(observed >= 0.0 && observed <= static_cast<double>(n))) {
    throw ConfigError("observed count must lie in [0, n]");
  }

  ProportionTestResult result;
  result.observed = observed;
  result.n = n;
  result.p0 = p0;
  const double dn = static_cast<double>(n);
  result.z = (observed / dn - p0) / std::sqrt(p0 * (1.0 - p0) / dn);
  result.p_normal = std::min(1.0, std::erfc(std::abs(result.z) / std::sqrt(2.0)));

  const double rounded = std::round(observed);
  if (std::abs(observed - rounded) < 1e-9) {
    // Two-sided exact test: sum every outcome at most as likely as the
    // observed one. The small relative slack keeps equally likely opposite
    // tails (e.g. p0 = 0.5) included despite rounding.
    const auto k = static_cast<std::size_t>(rounded);
    const double log_pk = log_binomial_pmf(n, k, p0);
    double p = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      const double log_pj = log_binomial_pmf(n, j, p0);
      if (log_pj <= log_pk + 1e-7) p += std::exp(log_pj);
    }
    result.p_exact = std::min(1.0, p);
  }
  return result;
}

DistributionSummary distribution_summary(std::span<const double> values) {
  if (values.empty()) throw ValidationError("distribution summary needs a non-empty sample");

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  DistributionSummary s;
  s.n = n;
  s.min = sorted.front();
  s.max = sorted.back();
  s.median = interpolated_quantile(sorted, 0.5);
  s.q1 = interpolated_quantile(sorted, 0.25);
  s.q3 = interpolated_quantile(sorted, 0.75);

  double sum = 0.0;
  for (double v : sorted) sum += v;
  s.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / (static_cast<double>(n) - 1.0));
  }

  const double iqr = s.q3 - s.q1;
  const double lo_fence = s.q1 - 1.5 * iqr;
  const double hi_fence = s.q3 + 1.5 * iqr;
  s.lower_adjacent = *std::find_if(sorted.begin(), sorted.end(),
                                   [&](double v) { return v >= lo_fence; });
  s.upper_adjacent = *std::find_if(sorted.rbegin(), sorted.rend(),
                                   [&](double v) { return v <= hi_fence; });
  return s;
}

}  // namespace pctrank
