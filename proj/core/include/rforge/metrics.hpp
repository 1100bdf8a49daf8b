#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rforge/model.hpp"

namespace rforge {

// Every function here is pure. Metrics with a zero denominator are
// undefined-marked (empty optional), never silently 0.

/// F-beta with beta = 2: 5PR/(4P+R). Recall carries twice the weight of
/// precision. Undefined when both inputs are 0.
std::optional<double> f2_score(double precision, double recall);

/// (new_value - base) / base. Throws ZeroBase when base == 0.
double relative_improvement(double new_value, double base);

/// Combines 1-5 information-coverage (recall position) and
/// extra-information ratings: 5*EI*IC/(4*EI+IC).
/// Throws OutOfRange unless both arguments lie in [1, 5].
double summary_f2(double ic, double ei);

/// Round half away from zero to the given number of decimals.
double round_to_decimals(double value, int decimals);

struct ConfusionCounts {
  long tp = 0, fp = 0, fn = 0, tn = 0;
};

struct MetricTriple {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f2;
};

MetricTriple metrics_from_counts(const ConfusionCounts& c);

struct ComponentScore {
  ConfusionCounts counts;
  MetricTriple metrics;
};

/// Per-component confusion over a shared sentence universe, plus the
/// micro-pooled overall row (counts summed across components).
struct ClassificationReport {
  std::map<RationaleComponent, ComponentScore> per_component;
  ConfusionCounts overall_counts;
  MetricTriple overall;
};

/// Sentences are matched by (artifact kind, locator, ordinal); both
/// sides must cover exactly the same universe or IdMismatch is thrown.
/// Components scored: the three extraction targets plus any component
/// labeled on either side.
ClassificationReport classification_report(const std::vector<LabeledSentence>& predicted,
                                           const std::vector<LabeledSentence>& gold);

struct AgreementScore {
  std::optional<double> kappa;
  std::optional<double> weighted_kappa;
  std::optional<double> alpha;
};

/// Cohen's kappa over two equal-length categorical ratings.
/// Perfect agreement returns exactly 1.0; chance-only agreement with
/// pe == 1 and po < 1 is undefined-marked.
std::optional<double> cohens_kappa(std::span<const int> a, std::span<const int> b);

/// Quadratically weighted Cohen's kappa for ordinal 1..scale_size data:
/// 1 - sum(w*O)/sum(w*E) with w_ij = (i-j)^2/(scale_size-1)^2.
std::optional<double> weighted_kappa(std::span<const int> a, std::span<const int> b,
                                     int scale_size);

/// Krippendorff's alpha for nominal data, 1 - Do/De over the coincidence
/// matrix. `ratings` is units x raters with missing cells; units with
/// fewer than two ratings are ignored. Throws InsufficientData when
/// fewer than two units remain.
std::optional<double> krippendorff_alpha(
    const std::vector<std::vector<std::optional<int>>>& ratings);

struct SizeFilterStats {
  double q1 = 0, q3 = 0, iqr = 0;
  double lower_fence = 0, upper_fence = 0;
};

/// Tukey-style fences. Quartiles use linear interpolation at the
/// exclusive rank p*(n+1), clamped to the data range.
SizeFilterStats iqr_fences(std::vector<double> values, double k);

}  // namespace rforge
