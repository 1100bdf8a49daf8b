#include "rforge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "rforge/errors.hpp"

namespace rforge {

std::optional<double> f2_score(double precision, double recall) {
  double denom = 4.0 * precision + recall;
  if (denom == 0.0) return std::nullopt;
  return 5.0 * precision * recall / denom;
}

double relative_improvement(double new_value, double base) {
  if (base == 0.0) {
    throw Error(ErrorCode::ZeroBase, "relative improvement needs a nonzero base");
  }
  return (new_value - base) / base;
}

double summary_f2(double ic, double ei) {
  if (ic < 1.0 || ic > 5.0 || ei < 1.0 || ei > 5.0) {
    throw Error(ErrorCode::OutOfRange, "IC and EI ratings live on a 1-5 scale");
  }
  return 5.0 * ei * ic / (4.0 * ei + ic);
}

double round_to_decimals(double value, int decimals) {
  double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

MetricTriple metrics_from_counts(const ConfusionCounts& c) {
  MetricTriple m;
  if (c.tp + c.fp > 0) m.precision = static_cast<double>(c.tp) / (c.tp + c.fp);
  if (c.tp + c.fn > 0) m.recall = static_cast<double>(c.tp) / (c.tp + c.fn);
  if (m.precision && m.recall) m.f2 = f2_score(*m.precision, *m.recall);
  return m;
}

namespace {

using SentenceKey = std::tuple<int, std::string, int>;

SentenceKey key_of(const LabeledSentence& s) {
  return {static_cast<int>(s.sentence.artifact.kind), s.sentence.artifact.locator,
          s.sentence.ordinal};
}

}  // namespace

ClassificationReport classification_report(const std::vector<LabeledSentence>& predicted,
                                           const std::vector<LabeledSentence>& gold) {
  std::map<SentenceKey, ComponentSet> pred_map, gold_map;
  for (const auto& s : predicted) pred_map[key_of(s)] = s.labels;
  for (const auto& s : gold) gold_map[key_of(s)] = s.labels;
  if (pred_map.size() != predicted.size() || gold_map.size() != gold.size()) {
    throw Error(ErrorCode::IdMismatch, "duplicate sentence ids in input");
  }
  if (pred_map.size() != gold_map.size()) {
    throw Error(ErrorCode::IdMismatch,
                "predicted and gold cover different sentence sets");
  }
  for (const auto& [key, labels] : pred_map) {
    (void)labels;
    if (!gold_map.count(key)) {
      throw Error(ErrorCode::IdMismatch,
                  "predicted sentence missing from gold: " + std::get<1>(key) + "#" +
                      std::to_string(std::get<2>(key)));
    }
  }

  ComponentSet scored;
  for (auto c : extraction_targets()) scored.insert(c);
  for (const auto& [key, labels] : pred_map) {
    (void)key;
    scored = scored.unite(labels);
  }
  for (const auto& [key, labels] : gold_map) {
    (void)key;
    scored = scored.unite(labels);
  }

  ClassificationReport report;
  for (auto component : scored.items()) {
    ConfusionCounts counts;
    for (const auto& [key, pred_labels] : pred_map) {
      bool p = pred_labels.contains(component);
      bool g = gold_map.at(key).contains(component);
      if (p && g) {
        ++counts.tp;
      } else if (p) {
        ++counts.fp;
      } else if (g) {
        ++counts.fn;
      } else {
        ++counts.tn;
      }
    }
    report.per_component[component] = ComponentScore{counts, metrics_from_counts(counts)};
    report.overall_counts.tp += counts.tp;
    report.overall_counts.fp += counts.fp;
    report.overall_counts.fn += counts.fn;
    report.overall_counts.tn += counts.tn;
  }
  report.overall = metrics_from_counts(report.overall_counts);
  return report;
}

std::optional<double> cohens_kappa(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "rating lists differ in length");
  }
  const size_t n = a.size();
  if (n < 2) {
    throw Error(ErrorCode::InsufficientData, "need at least two rated items");
  }
  size_t matches = 0;
  std::map<int, size_t> count_a, count_b;
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) ++matches;
    ++count_a[a[i]];
    ++count_b[b[i]];
  }
  if (matches == n) return 1.0;
  double po = static_cast<double>(matches) / n;
  double pe = 0.0;
  for (const auto& [cat, ca] : count_a) {
    auto it = count_b.find(cat);
    if (it == count_b.end()) continue;
    pe += (static_cast<double>(ca) / n) * (static_cast<double>(it->second) / n);
  }
  if (pe >= 1.0) return std::nullopt;  // po < 1 here
  return (po - pe) / (1.0 - pe);
}

std::optional<double> weighted_kappa(std::span<const int> a, std::span<const int> b,
                                     int scale_size) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "rating lists differ in length");
  }
  if (scale_size < 2) {
    throw Error(ErrorCode::InvalidArgument, "scale_size must be at least 2");
  }
  const size_t n = a.size();
  if (n < 2) {
    throw Error(ErrorCode::InsufficientData, "need at least two rated items");
  }
  const int k = scale_size;
  std::vector<std::vector<long>> observed(k, std::vector<long>(k, 0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < 1 || a[i] > k || b[i] < 1 || b[i] > k) {
      throw Error(ErrorCode::OutOfScale,
                  "rating outside 1.." + std::to_string(k) + " scale");
    }
    ++observed[a[i] - 1][b[i] - 1];
  }
  std::vector<long> row(k, 0), col(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      row[i] += observed[i][j];
      col[j] += observed[i][j];
    }
  }
  const double norm = static_cast<double>(k - 1) * (k - 1);
  double weighted_observed = 0.0, weighted_expected = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double w = static_cast<double>((i - j) * (i - j)) / norm;
      weighted_observed += w * (static_cast<double>(observed[i][j]) / n);
      weighted_expected +=
          w * (static_cast<double>(row[i]) / n) * (static_cast<double>(col[j]) / n);
    }
  }
  if (weighted_observed == 0.0) return 1.0;  // perfect agreement
  if (weighted_expected == 0.0) return std::nullopt;
  return 1.0 - weighted_observed / weighted_expected;
}

std::optional<double> krippendorff_alpha(
    const std::vector<std::vector<std::optional<int>>>& ratings) {
  std::map<std::pair<int, int>, double> coincidence;
  std::set<int> categories;
  int usable_units = 0;
  double n_total = 0.0;

  for (const auto& unit : ratings) {
    std::vector<int> values;
    for (const auto& cell : unit) {
      if (cell) values.push_back(*cell);
    }
    const size_t m = values.size();
    if (m < 2) continue;
    ++usable_units;
    for (size_t i = 0; i < m; ++i) {
      categories.insert(values[i]);
      for (size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        coincidence[{values[i], values[j]}] += 1.0 / (m - 1);
      }
    }
    n_total += static_cast<double>(m);
  }
  if (usable_units < 2) {
    throw Error(ErrorCode::InsufficientData,
                "need at least two units with two or more ratings");
  }

  std::map<int, double> marginal;
  double disagreement = 0.0;
  for (const auto& [pair, count] : coincidence) {
    marginal[pair.first] += count;
    if (pair.first != pair.second) disagreement += count;
  }
  if (disagreement == 0.0) return 1.0;  // perfect agreement

  double observed = disagreement / n_total;
  double expected = 0.0;
  for (int c : categories) {
    for (int k : categories) {
      if (c == k) continue;
      expected += marginal[c] * marginal[k];
    }
  }
  expected /= n_total * (n_total - 1.0);
  if (expected == 0.0) return std::nullopt;
  return 1.0 - observed / expected;
}

SizeFilterStats iqr_fences(std::vector<double> values, double k) {
  if (values.empty()) {
    throw Error(ErrorCode::InvalidArgument, "iqr_fences needs at least one value");
  }
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  auto quantile = [&](double p) {
    double rank = p * static_cast<double>(n + 1);  // 1-based exclusive rank
    if (rank <= 1.0) return values.front();
    if (rank >= static_cast<double>(n)) return values.back();
    size_t lo = static_cast<size_t>(rank);
    double frac = rank - static_cast<double>(lo);
    return values[lo - 1] + frac * (values[lo] - values[lo - 1]);
  };
  SizeFilterStats stats;
  stats.q1 = quantile(0.25);
  stats.q3 = quantile(0.75);
  stats.iqr = stats.q3 - stats.q1;
  stats.lower_fence = stats.q1 - k * stats.iqr;
  stats.upper_fence = stats.q3 + k * stats.iqr;
  return stats;
}

}  // namespace rforge
