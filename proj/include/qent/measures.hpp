#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qent/partition.hpp"
#include "qent/state.hpp"

namespace qent {

enum class MeasureKind { Linear, VonNeumann, RenyiInf, Negativity };

inline constexpr MeasureKind kAllMeasures[] = {MeasureKind::Linear, MeasureKind::VonNeumann,
                                               MeasureKind::RenyiInf, MeasureKind::Negativity};

// "LINEAR", "VON_NEUMANN", "RENYI_INF", "NEGATIVITY".
const char* to_string(MeasureKind kind) noexcept;
// Short labels used in tables: E_L, E_VN, E_R, E_N.
const char* short_label(MeasureKind kind) noexcept;
// Accepts the canonical names and the aliases linear/l, vn/von_neumann,
// renyi/r, neg/negativity/n, case-insensitively.
std::optional<MeasureKind> parse_measure_kind(std::string_view text);

// Entropies of a marginal spectrum (entries in [0, 1], summing to 1).
double linear_entropy(std::span<const double> spectrum);
double von_neumann_entropy(std::span<const double> spectrum);  // bits
double renyi_inf_entropy(std::span<const double> spectrum);    // nats
// ((sum sqrt(lambda))^2 - 1) / 2: the negativity of a pure state whose
// marginal has this spectrum.
double negativity_from_spectrum(std::span<const double> spectrum);
double measure_from_spectrum(MeasureKind kind, std::span<const double> spectrum);

double negativity(const PureState& s, const Bipartition& b);
// Brute force: sum of |negative eigenvalues| of the partial transpose of
// |s><s|. Limited to n <= 7.
double negativity_oracle(const PureState& s, const Bipartition& b);

struct MeasureReport {
  MeasureKind kind = MeasureKind::Linear;
  double total = 0.0;
  std::vector<std::pair<Bipartition, double>> per_bipartition;
};

MeasureReport global_measure(const PureState& s, MeasureKind kind);

// Total only, for the search loop. `amps` must be normalized, 2 <= n <= 10.
double global_total(std::span<const complex> amps, int n, MeasureKind kind);

// Twice the average single-qubit linear entropy.
double meyer_wallach_q(const PureState& s);
// Normalized average purity deficit over all C(n, m) size-m subsets.
double scott_q_m(const PureState& s, int m);

// Value of the measure for a state whose every marginal is maximally mixed.
double upper_bound(MeasureKind kind, int n);

struct EntropyStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct SizeSummary {
  int m = 0;
  std::size_t subsets = 0;
  EntropyStats linear;
  EntropyStats von_neumann;
  EntropyStats renyi_inf;
  // Largest Frobenius distance of a size-m marginal from I / 2^m.
  double max_mixed_deviation = 0.0;
  bool all_maximally_mixed = false;
};

inline constexpr double kMaximallyMixedTolerance = 1e-8;

std::vector<SizeSummary> marginal_mixedness_report(const PureState& s, int m_max);

std::string report_to_json(const MeasureReport& r);
// Columns: subset_mask, subset_size, value.
std::string report_to_csv(const MeasureReport& r);
std::string mixedness_to_json(const std::vector<SizeSummary>& summary);

}  // namespace qent
