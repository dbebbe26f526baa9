#pragma once

// Cross-run statistics: prefix best-so-far, normalized ranks, Spearman's rho
// and median/IQR summaries.
//
// Ties share the average rank everywhere. Quantiles interpolate linearly
// between order statistics (h = (n - 1) p).

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "shapebench/errors.hpp"
#include "shapebench/problems/formulas.hpp"

namespace shapebench {

/// Best reward among the first ceil(fraction * budget) rewards. A trajectory
/// shorter than that prefix keeps its last best.
inline double best_so_far_at(const std::vector<double>& rewards, std::size_t budget, double fraction) {
  if (rewards.empty()) throw ContractError("best_so_far_at: empty trajectory");
  if (!(fraction > 0.0 && fraction <= 1.0)) throw ContractError("best_so_far_at: fraction must lie in (0, 1]");
  if (budget == 0) throw ContractError("best_so_far_at: budget must be positive");
  // guard against 0.6 * 5 = 3.0000000000000004
  const double raw = fraction * static_cast<double>(budget);
  const auto k = static_cast<std::size_t>(std::ceil(raw - 1e-9 * std::max(1.0, raw)));
  const std::size_t n = std::min(std::max<std::size_t>(k, 1), rewards.size());
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, rewards[i]);
  return best;
}

/// 1-based ranks of `values`, ascending, ties averaged.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

/// Best method 0, worst 1: average ranks mapped affinely. All equal gives 0.5.
/// `sense` says whether larger values are better.
inline std::map<std::string, double> normalized_rank(const std::map<std::string, double>& values, Sense sense) {
  if (values.size() < 2) throw ContractError("normalized_rank: need at least two methods");
  std::vector<double> v;
  for (const auto& [m, x] : values) {
    if (std::isnan(x)) throw ContractError("normalized_rank: NaN value for " + m);
    v.push_back(sense == Sense::maximize ? -x : x);  // rank 1 = best
  }
  const auto r = average_ranks(v);
  const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
  std::map<std::string, double> out;
  std::size_t i = 0;
  for (const auto& [m, x] : values) {
    out[m] = *hi > *lo ? (r[i] - *lo) / (*hi - *lo) : 0.5;
    ++i;
  }
  return out;
}

/// Pearson correlation of average ranks; nullopt when either side has no spread.
inline std::optional<double> spearman_rho(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ContractError("spearman_rho: rankings differ in length");
  if (a.size() < 3) throw ContractError("spearman_rho: need at least three methods");
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (!(saa > 0.0) || !(sbb > 0.0)) return std::nullopt;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

/// rho over the methods present in both maps; nullopt below three shared
/// methods or without spread.
inline std::optional<double> spearman_shared(const std::map<std::string, double>& a,
                                             const std::map<std::string, double>& b) {
  std::vector<double> x, y;
  for (const auto& [m, v] : a) {
    auto it = b.find(m);
    if (it == b.end() || std::isnan(v) || std::isnan(it->second)) continue;
    x.push_back(v);
    y.push_back(it->second);
  }
  if (x.size() < 3) return std::nullopt;
  return spearman_rho(x, y);
}

struct PairwiseSpearman {
  double mean = 0.0;
  std::size_t pairs_used = 0;
  std::size_t pairs_skipped = 0;
};

/// Mean rho over all unordered pairs of rankings. Methods missing from a
/// ranking drop out of the pairs that ranking takes part in.
inline PairwiseSpearman mean_pairwise_spearman(const std::vector<std::map<std::string, double>>& rankings) {
  if (rankings.size() < 2) throw ContractError("mean_pairwise_spearman: need at least two rankings");
  PairwiseSpearman out;
  double sum = 0.0;
  for (std::size_t i = 0; i < rankings.size(); ++i) {
    for (std::size_t j = i + 1; j < rankings.size(); ++j) {
      if (auto r = spearman_shared(rankings[i], rankings[j])) {
        sum += *r;
        ++out.pairs_used;
      } else {
        ++out.pairs_skipped;
      }
    }
  }
  if (out.pairs_used == 0) throw ContractError("mean_pairwise_spearman: no usable pairs");
  out.mean = sum / static_cast<double>(out.pairs_used);
  return out;
}

/// Linear-interpolation quantile of sorted data.
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw ContractError("quantile: empty input");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

struct MedianIqr {
  double median;
  double q25;
  double q75;
  double iqr() const { return q75 - q25; }
};

inline MedianIqr median_iqr(std::vector<double> values) {
  if (values.empty()) throw ContractError("median_iqr: empty input");
  std::sort(values.begin(), values.end());
  return {quantile_sorted(values, 0.5), quantile_sorted(values, 0.25), quantile_sorted(values, 0.75)};
}

}  // namespace shapebench
