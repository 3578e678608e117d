#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace declutter {

enum class WilcoxonMethod {
  kAuto,    // exact up to kExactWilcoxonLimit non-zero pairs, normal beyond
  kExact,
  kNormal,
};

inline constexpr int kExactWilcoxonLimit = 15;

struct WilcoxonResult {
  double statistic = 0.0;  // W = min(W+, W-)
  double p = 1.0;          // two-sided
  int n = 0;               // pairs with a non-zero difference
  bool exact = false;
};

// Two-sided Wilcoxon signed-rank test on differences xs[i] - ys[i]. Zero
// differences are dropped and tied magnitudes get mid-ranks. The exact branch
// enumerates all sign assignments (ties included); the normal branch uses tie
// and continuity corrections. Throws DimensionMismatch, EmptyInput or
// AllZeroDifferences.
WilcoxonResult WilcoxonSignedRank(std::span<const double> xs,
                                  std::span<const double> ys,
                                  WilcoxonMethod method = WilcoxonMethod::kAuto);

// Throws EmptyInput.
double Median(std::span<const double> values);

struct Comparison {
  std::string dataset;
  std::string engine;
  std::string metric;
  std::string variant_a;
  std::string variant_b;
  double median_a = 0.0;
  double median_b = 0.0;
  double statistic = 0.0;
  double p = 1.0;
  bool significant = false;
};

inline constexpr double kSignificanceLevel = 0.05;

void WriteComparisonCsv(std::ostream& out, std::span<const Comparison> rows);

}  // namespace declutter
