#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qent/measures.hpp"

namespace qent {

// Binned density of a global measure over Haar-random states. Bins span
// [0, upper_bound(kind, n)] uniformly.
struct Histogram {
  MeasureKind kind = MeasureKind::Linear;
  int n = 0;
  std::vector<double> bin_edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t samples = 0;
  std::vector<double> density;  // sum(density * width) == 1
  std::uint64_t seed = 0;
  double sample_min = 0.0;
  double sample_max = 0.0;
  double median = 0.0;  // exact sample median, not a binned estimate
};

inline constexpr std::uint64_t kSamplesPerStream = 4096;

// Deterministic for a given seed regardless of the thread count: sample i is
// drawn from sub-stream i / kSamplesPerStream. threads = 0 uses the hardware
// concurrency.
Histogram sample_distribution(int n, MeasureKind kind, std::uint64_t samples, int bins, std::uint64_t seed,
                              int threads = 0);

// Raw global-measure values of the same draws, in sample order.
std::vector<double> sample_values(int n, MeasureKind kind, std::uint64_t samples, std::uint64_t seed,
                                  int threads = 0);

// Fraction of samples strictly below `value`.
double fraction_below(const std::vector<double>& sorted_values, double value);

struct Marker {
  std::string name;
  double value = 0.0;
};

// Evaluates each named state (catalog name or file path). Throws
// DimensionMismatch when a state does not have n qubits.
std::vector<Marker> marker_values(int n, MeasureKind kind, const std::vector<std::string>& states);

// Columns: bin_left, bin_right, count, density.
std::string histogram_to_csv(const Histogram& h);
std::string histogram_to_json(const Histogram& h);
// Columns: name, value.
std::string markers_to_csv(const std::vector<Marker>& markers);
// gnuplot script plotting `csv_path` with vertical lines at the markers.
std::string gnuplot_script(const Histogram& h, const std::string& csv_path, const std::vector<Marker>& markers);

}  // namespace qent
