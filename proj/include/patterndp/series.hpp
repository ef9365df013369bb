#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patterndp/error.hpp"

namespace patterndp {

// Raw measurement stream, e.g. one heart-rate reading per minute.
// Timestamps, when present, are seconds, one per value, sorted non-decreasing.
// Input must be dense; gaps are the caller's problem.
struct RawSeries {
  std::vector<double> values;
  std::optional<std::vector<std::int64_t>> timestamps;
};

// Aggregated query result: ordered bins x_1..x_n. Bin indices are 1-based in
// every external output and error message.
struct BinSeries {
  std::vector<double> bins;
  std::size_t bin_width = 1;  // raw records averaged per bin

  std::size_t size() const { return bins.size(); }
};

inline void require_valid(const BinSeries& s) {
  if (s.bins.empty()) throw DomainError("empty series");
  for (std::size_t i = 0; i < s.bins.size(); ++i) {
    if (!std::isfinite(s.bins[i])) {
      throw DomainError("bin " + std::to_string(i + 1) + " is not finite");
    }
  }
}

// Mean-aggregate consecutive windows of `window` raw records into bins. A
// trailing partial window becomes one final bin averaging its remainder, so
// no data is dropped.
inline BinSeries aggregate(const RawSeries& raw, std::size_t window) {
  if (raw.values.empty()) throw DomainError("empty series");
  if (window < 1) throw DomainError("window must be >= 1");
  BinSeries out;
  out.bin_width = window;
  out.bins.reserve((raw.values.size() + window - 1) / window);
  for (std::size_t i = 0; i < raw.values.size(); i += window) {
    const std::size_t end = std::min(i + window, raw.values.size());
    double sum = 0.0;
    for (std::size_t k = i; k < end; ++k) sum += raw.values[k];
    out.bins.push_back(sum / static_cast<double>(end - i));
  }
  return out;
}

}  // namespace patterndp
