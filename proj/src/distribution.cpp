#include "qent/distribution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include <json.hpp>

#include "qent/error.hpp"
#include "qent/rng.hpp"

namespace qent {

namespace {

void check_sampling(int n, std::uint64_t samples) {
  if (n < 2 || n > 7) throw Error(ErrorCode::InvalidArgument, "sampling needs 2 <= n <= 7, got " + std::to_string(n));
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");
}

}  // namespace

std::vector<double> sample_values(int n, MeasureKind kind, std::uint64_t samples, std::uint64_t seed, int threads) {
  check_sampling(n, samples);
  std::vector<double> values(samples);
  const std::uint64_t streams = (samples + kSamplesPerStream - 1) / kSamplesPerStream;

  const auto run_stream = [&](std::uint64_t stream) {
    Rng rng = make_rng(derive_seed(seed, stream));
    const std::uint64_t begin = stream * kSamplesPerStream;
    const std::uint64_t end = std::min(samples, begin + kSamplesPerStream);
    for (std::uint64_t i = begin; i < end; ++i) {
      const PureState s = haar_random_state(n, rng);
      values[i] = global_total(s.amplitudes(), n, kind);
    }
  };

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, streams));
  if (workers <= 1) {
    for (std::uint64_t s = 0; s < streams; ++s) run_stream(s);
    return values;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::uint64_t s = next++; s < streams && !failed; s = next++) {
          try {
            run_stream(s);
          } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
  return values;
}

Histogram sample_distribution(int n, MeasureKind kind, std::uint64_t samples, int bins, std::uint64_t seed,
                              int threads) {
  check_sampling(n, samples);
  if (bins < 2) throw Error(ErrorCode::InvalidArgument, "bins must be >= 2");

  std::vector<double> values = sample_values(n, kind, samples, seed, threads);
  const double bound = upper_bound(kind, n);

  Histogram h;
  h.kind = kind;
  h.n = n;
  h.samples = samples;
  h.seed = seed;
  h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) h.bin_edges[static_cast<std::size_t>(i)] = bound * i / bins;
  h.counts.assign(static_cast<std::size_t>(bins), 0);

  const double width = bound / bins;
  for (double v : values) {
    if (v > bound + 1e-9)
      throw Error(ErrorCode::Numerical, "sampled value " + std::to_string(v) + " exceeds the upper bound " +
                                            std::to_string(bound));
    const auto bin = static_cast<std::size_t>(std::clamp(std::floor(v / width), 0.0, bins - 1.0));
    ++h.counts[bin];
  }
  h.density.resize(h.counts.size());
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    h.density[i] = static_cast<double>(h.counts[i]) / (static_cast<double>(samples) * width);

  std::sort(values.begin(), values.end());
  h.sample_min = values.front();
  h.sample_max = values.back();
  const std::size_t mid = values.size() / 2;
  h.median = values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
  return h;
}

double fraction_below(const std::vector<double>& sorted_values, double value) {
  if (sorted_values.empty()) return 0.0;
  const auto it = std::lower_bound(sorted_values.begin(), sorted_values.end(), value);
  return static_cast<double>(it - sorted_values.begin()) / static_cast<double>(sorted_values.size());
}

std::vector<Marker> marker_values(int n, MeasureKind kind, const std::vector<std::string>& states) {
  std::vector<Marker> out;
  for (const auto& name : states) {
    const PureState s = resolve_state(name);
    if (s.qubits() != n)
      throw Error(ErrorCode::DimensionMismatch, "marker state " + name + " has " + std::to_string(s.qubits()) +
                                                    " qubits, expected " + std::to_string(n));
    out.push_back({name, global_measure(s, kind).total});
  }
  return out;
}

std::string histogram_to_csv(const Histogram& h) {
  std::string out = "bin_left,bin_right,count,density\n";
  char buf[128];
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%llu,%.17g\n", h.bin_edges[i], h.bin_edges[i + 1],
                  static_cast<unsigned long long>(h.counts[i]), h.density[i]);
    out += buf;
  }
  return out;
}

std::string histogram_to_json(const Histogram& h) {
  nlohmann::json doc{{"kind", to_string(h.kind)},
                     {"n", h.n},
                     {"samples", h.samples},
                     {"seed", h.seed},
                     {"bin_edges", h.bin_edges},
                     {"counts", h.counts},
                     {"density", h.density},
                     {"sample_min", h.sample_min},
                     {"sample_max", h.sample_max},
                     {"median", h.median},
                     {"upper_bound", upper_bound(h.kind, h.n)}};
  return doc.dump(2);
}

std::string markers_to_csv(const std::vector<Marker>& markers) {
  std::string out = "name,value\n";
  char buf[64];
  for (const auto& m : markers) {
    std::snprintf(buf, sizeof buf, ",%.17g\n", m.value);
    out += m.name + buf;
  }
  return out;
}

std::string gnuplot_script(const Histogram& h, const std::string& csv_path, const std::vector<Marker>& markers) {
  std::string out;
  out += "set datafile separator ','\n";
  out += "set xlabel '" + std::string(short_label(h.kind)) + "'\n";
  out += "set ylabel 'P'\n";
  out += "set title '" + std::string(short_label(h.kind)) + " over " + std::to_string(h.samples) +
         " Haar-random states, n=" + std::to_string(h.n) + "'\n";
  char buf[160];
  int tag = 1;
  for (const auto& m : markers) {
    std::snprintf(buf, sizeof buf, "set arrow %d from %.12g, graph 0 to %.12g, graph 1 nohead dt 2\n", tag, m.value,
                  m.value);
    out += buf;
    std::snprintf(buf, sizeof buf, "set label %d '%s' at %.12g, graph 0.95 rotate left\n", tag, m.name.c_str(),
                  m.value);
    out += buf;
    ++tag;
  }
  out += "plot '" + csv_path + "' every ::1 using (($1+$2)/2):4 with steps notitle\n";
  return out;
}

}  // namespace qent
