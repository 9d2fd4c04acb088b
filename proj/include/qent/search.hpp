#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qent/measures.hpp"
#include "qent/state.hpp"

namespace qent {

enum class MoveRule { Additive, BrownMultiplicative };
enum class InitialState { BasisZero, RandomHaar, File };

const char* to_string(MoveRule rule) noexcept;
const char* to_string(InitialState init) noexcept;
std::optional<MoveRule> parse_move_rule(std::string_view text);
std::optional<InitialState> parse_initial_state(std::string_view text);

struct SearchConfig {
  int n = 3;
  MeasureKind kind = MeasureKind::VonNeumann;
  MoveRule move_rule = MoveRule::Additive;
  double delta_init = 0.1;
  int rejection_window = 500;
  double delta_floor = 1e-8;
  std::uint64_t seed = 1;
  InitialState initial_state = InitialState::BasisZero;
  // Required when initial_state == File.
  std::optional<PureState> initial_file_state;
  // Multiplicative factors of the Brown move are uniform on (0, brown_factor_max).
  double brown_factor_max = 2.0;
  // Permits the Brown move from |0...0>, which can never leave that state.
  bool allow_degenerate = false;
};

// Throws InvalidConfig with a message naming the offending field.
void validate(const SearchConfig& config);

struct AcceptedStep {
  std::uint64_t step = 0;  // proposal index, 1-based
  double delta_max = 0.0;
  double objective = 0.0;
};

struct SearchTrace {
  SearchConfig config;
  double initial_objective = 0.0;
  std::vector<AcceptedStep> accepted_steps;
  std::vector<std::uint64_t> halvings;  // proposal index at which each halving happened
  std::uint64_t total_proposals = 0;
  PureState final_state = PureState::from_amplitudes(1, {1.0, 0.0});
  MeasureReport final_report;

  double final_objective() const { return final_report.total; }
};

// Adds an independent uniform draw from (-delta_max, delta_max) to every real
// and imaginary part, then renormalizes.
PureState perturb_additive(const PureState& s, double delta_max, Rng& rng);

// Picks one coefficient uniformly and multiplies its real and imaginary parts
// by independent factors uniform on (0, factor_max), then renormalizes.
PureState perturb_brown(const PureState& s, Rng& rng, double factor_max = 2.0);

// Stochastic hill climb: accept a proposal iff the measure strictly increases;
// after rejection_window consecutive rejections halve delta_max; stop once
// delta_max <= delta_floor.
SearchTrace hill_climb(const SearchConfig& config);

struct RestartSummary {
  std::uint64_t seed = 0;
  double final_objective = 0.0;
  std::array<double, 4> final_all{};  // indexed like kAllMeasures
  std::uint64_t total_proposals = 0;
  std::size_t accepted = 0;
  std::vector<complex> final_amplitudes;
};

struct MultiRestartResult {
  SearchTrace best;
  std::size_t best_index = 0;
  std::vector<RestartSummary> runs;  // ordered by seed
};

// Runs hill_climb with seeds seed, seed+1, ... on up to `threads` workers
// (0 = hardware concurrency). Ties keep the lowest seed.
MultiRestartResult multi_restart(const SearchConfig& config, int restarts, int threads = 0);

std::string trace_to_json(const SearchTrace& trace);
// Columns: step, delta_max, objective.
std::string trace_to_csv(const SearchTrace& trace);
std::string restarts_to_csv(const std::vector<RestartSummary>& runs);

}  // namespace qent
