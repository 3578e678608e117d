#include "declutter/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "declutter/error.h"

namespace declutter {

namespace {

// Mid-ranks of `values` (1-based), ties sharing the mean of their positions.
std::vector<double> MidRanks(std::span<const double> values,
                             std::vector<int>* tie_sizes) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    if (tie_sizes && j > i) tie_sizes->push_back(static_cast<int>(j - i + 1));
    i = j + 1;
  }
  return ranks;
}

// P(T+ <= w) under the null, by counting sign assignments. Ranks are doubled
// so mid-ranks stay integral.
double ExactLowerTail(std::span<const double> ranks, double w) {
  std::vector<int> doubled(ranks.size());
  int total = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    doubled[i] = static_cast<int>(std::lround(2.0 * ranks[i]));
    total += doubled[i];
  }
  std::vector<double> count(total + 1, 0.0);
  count[0] = 1.0;
  int reach = 0;
  for (int r : doubled) {
    for (int s = reach; s >= 0; --s) {
      if (count[s] != 0.0) count[s + r] += count[s];
    }
    reach += r;
  }
  const long limit = std::lround(2.0 * w);
  double below = 0.0;
  for (long s = 0; s <= std::min<long>(limit, total); ++s) below += count[s];
  return below / std::ldexp(1.0, static_cast<int>(ranks.size()));
}

}  // namespace

WilcoxonResult WilcoxonSignedRank(std::span<const double> xs,
                                  std::span<const double> ys,
                                  WilcoxonMethod method) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("paired samples of sizes {} and {}", xs.size(),
                            ys.size()));
  }
  if (xs.empty()) throw Error(ErrorCode::kEmptyInput, "empty paired sample");

  std::vector<double> magnitude;
  std::vector<bool> positive;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = xs[i] - ys[i];
    if (d == 0.0) continue;
    magnitude.push_back(std::abs(d));
    positive.push_back(d > 0.0);
  }
  if (magnitude.empty()) {
    throw Error(ErrorCode::kAllZeroDifferences, "all paired differences are zero");
  }

  std::vector<int> ties;
  const std::vector<double> ranks = MidRanks(magnitude, &ties);
  double w_plus = 0.0;
  double w_minus = 0.0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    (positive[i] ? w_plus : w_minus) += ranks[i];
  }

  WilcoxonResult result;
  result.n = static_cast<int>(ranks.size());
  result.statistic = std::min(w_plus, w_minus);
  result.exact = method == WilcoxonMethod::kExact ||
                 (method == WilcoxonMethod::kAuto &&
                  result.n <= kExactWilcoxonLimit);
  if (result.exact) {
    result.p = std::min(1.0, 2.0 * ExactLowerTail(ranks, result.statistic));
    return result;
  }

  const double n = result.n;
  const double mean = n * (n + 1.0) / 4.0;
  double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
  for (int t : ties) variance -= (static_cast<double>(t) * t * t - t) / 48.0;
  if (!(variance > 0.0)) {
    result.p = 1.0;
    return result;
  }
  const double z =
      std::max(0.0, (std::abs(result.statistic - mean) - 0.5) / std::sqrt(variance));
  result.p = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return result;
}

double Median(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "median of no values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  if (sorted.size() % 2 == 1) return sorted[mid];
  return 0.5 * (sorted[mid - 1] + sorted[mid]);
}

void WriteComparisonCsv(std::ostream& out, std::span<const Comparison> rows) {
  out << "dataset,engine,metric,variant_a,variant_b,median_a,median_b,W,p,"
         "significant\n";
  for (const Comparison& c : rows) {
    out << fmt::format("{},{},{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{}\n",
                       c.dataset, c.engine, c.metric, c.variant_a, c.variant_b,
                       c.median_a, c.median_b, c.statistic, c.p,
                       c.significant ? "true" : "false");
  }
}

}  // namespace declutter
