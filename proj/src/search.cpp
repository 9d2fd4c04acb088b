#include "qent/search.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <atomic>
#include <exception>
#include <thread>

#include <json.hpp>

#include "qent/error.hpp"
#include "qent/rng.hpp"

namespace qent {

const char* to_string(MoveRule rule) noexcept {
  return rule == MoveRule::Additive ? "ADDITIVE" : "BROWN_MULTIPLICATIVE";
}

const char* to_string(InitialState init) noexcept {
  switch (init) {
    case InitialState::BasisZero: return "BASIS_ZERO";
    case InitialState::RandomHaar: return "RANDOM_HAAR";
    case InitialState::File: return "FILE";
  }
  return "?";
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

}  // namespace

std::optional<MoveRule> parse_move_rule(std::string_view text) {
  const std::string s = lower(text);
  if (s == "additive" || s == "add") return MoveRule::Additive;
  if (s == "brown" || s == "brown_multiplicative" || s == "multiplicative") return MoveRule::BrownMultiplicative;
  return std::nullopt;
}

std::optional<InitialState> parse_initial_state(std::string_view text) {
  const std::string s = lower(text);
  if (s == "zero" || s == "basis_zero") return InitialState::BasisZero;
  if (s == "haar" || s == "random" || s == "random_haar") return InitialState::RandomHaar;
  if (s == "file") return InitialState::File;
  return std::nullopt;
}

void validate(const SearchConfig& c) {
  const auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); };
  if (c.n < 2 || c.n > kMaxQubits) fail("n must be in [2, 10], got " + std::to_string(c.n));
  if (!(c.delta_floor > 0.0)) fail("delta_floor must be positive");
  if (!(c.delta_init > c.delta_floor)) fail("delta_init must exceed delta_floor");
  if (!std::isfinite(c.delta_init)) fail("delta_init must be finite");
  if (c.rejection_window < 1) fail("rejection_window must be >= 1");
  if (!(c.brown_factor_max > 0.0) || !std::isfinite(c.brown_factor_max)) fail("brown_factor_max must be positive");
  if (c.initial_state == InitialState::File) {
    if (!c.initial_file_state) fail("initial_state FILE needs a state");
    if (c.initial_file_state->qubits() != c.n)
      fail("initial state has " + std::to_string(c.initial_file_state->qubits()) + " qubits, config n=" +
           std::to_string(c.n));
  }
  if (c.move_rule == MoveRule::BrownMultiplicative && c.initial_state == InitialState::BasisZero &&
      !c.allow_degenerate)
    fail("the Brown move cannot leave |0...0>; choose another initial state or allow the degenerate run");
}

namespace {

void renormalize(std::vector<complex>& v) { normalize_in_place(v); }

void additive_move(std::span<const complex> in, std::vector<complex>& out, double delta_max, Rng& rng) {
  std::uniform_real_distribution<double> u(-delta_max, delta_max);
  out.resize(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    const double dre = u(rng);
    const double dim = u(rng);
    out[k] = {in[k].real() + dre, in[k].imag() + dim};
  }
}

double positive_factor(std::uniform_real_distribution<double>& u, Rng& rng) {
  double f = 0.0;
  while (f <= 0.0) f = u(rng);
  return f;
}

void brown_move(std::span<const complex> in, std::vector<complex>& out, double factor_max, Rng& rng) {
  out.assign(in.begin(), in.end());
  std::uniform_int_distribution<std::size_t> pick(0, in.size() - 1);
  std::uniform_real_distribution<double> u(0.0, factor_max);
  const std::size_t k = pick(rng);
  const double fr = positive_factor(u, rng);
  const double fi = positive_factor(u, rng);
  out[k] = {out[k].real() * fr, out[k].imag() * fi};
}

}  // namespace

PureState perturb_additive(const PureState& s, double delta_max, Rng& rng) {
  if (!(delta_max > 0.0)) throw Error(ErrorCode::InvalidArgument, "delta_max must be positive");
  std::vector<complex> out;
  for (int attempt = 0; attempt < 2; ++attempt) {
    additive_move(s.amplitudes(), out, delta_max, rng);
    double sq = 0.0;
    for (const auto& z : out) sq += std::norm(z);
    if (sq > 0.0) return PureState::from_amplitudes(s.qubits(), std::move(out));
  }
  throw Error(ErrorCode::ZeroVector, "additive perturbation produced the zero vector twice");
}

PureState perturb_brown(const PureState& s, Rng& rng, double factor_max) {
  std::vector<complex> out;
  brown_move(s.amplitudes(), out, factor_max, rng);
  return PureState::from_amplitudes(s.qubits(), std::move(out));
}

namespace {

PureState initial_state(const SearchConfig& c) {
  switch (c.initial_state) {
    case InitialState::BasisZero: {
      std::vector<complex> amps(std::size_t{1} << c.n);
      amps[0] = 1.0;
      return PureState::from_amplitudes(c.n, std::move(amps));
    }
    case InitialState::RandomHaar: {
      Rng rng = make_rng(derive_seed(c.seed, 1));
      return haar_random_state(c.n, rng);
    }
    case InitialState::File: return *c.initial_file_state;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown initial state");
}

}  // namespace

SearchTrace hill_climb(const SearchConfig& config) {
  validate(config);
  SearchTrace trace;
  trace.config = config;

  const PureState start = initial_state(config);
  std::vector<complex> current(start.amplitudes().begin(), start.amplitudes().end());
  std::vector<complex> proposal;
  double objective = global_total(current, config.n, config.kind);
  trace.initial_objective = objective;

  Rng rng = make_rng(config.seed);
  double delta = config.delta_init;
  int rejections = 0;
  std::uint64_t step = 0;

  while (delta > config.delta_floor) {
    ++step;
    if (config.move_rule == MoveRule::Additive)
      additive_move(current, proposal, delta, rng);
    else
      brown_move(current, proposal, config.brown_factor_max, rng);
    double sq = 0.0;
    for (const auto& z : proposal) sq += std::norm(z);
    bool accepted = false;
    if (sq > 0.0) {
      renormalize(proposal);
      const double value = global_total(proposal, config.n, config.kind);
      if (value > objective) {
        objective = value;
        current.swap(proposal);
        trace.accepted_steps.push_back({step, delta, objective});
        accepted = true;
      }
    }
    if (accepted) {
      rejections = 0;
    } else if (++rejections >= config.rejection_window) {
      delta *= 0.5;
      trace.halvings.push_back(step);
      rejections = 0;
    }
  }

  trace.total_proposals = step;
  trace.final_state = PureState::from_amplitudes(config.n, std::move(current));
  trace.final_report = global_measure(trace.final_state, config.kind);
  return trace;
}

MultiRestartResult multi_restart(const SearchConfig& config, int restarts, int threads) {
  if (restarts < 1) throw Error(ErrorCode::InvalidConfig, "restarts must be >= 1");
  validate(config);
  const std::size_t count = static_cast<std::size_t>(restarts);
  std::vector<std::optional<SearchTrace>> traces(count);
  std::vector<std::exception_ptr> errors(count);

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(count));

  const auto run_one = [&](std::size_t i) {
    try {
      SearchConfig c = config;
      c.seed = config.seed + i;
      traces[i] = hill_climb(c);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) run_one(i);
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  MultiRestartResult result;
  for (std::size_t i = 0; i < count; ++i) {
    const SearchTrace& t = *traces[i];
    RestartSummary s;
    s.seed = t.config.seed;
    s.final_objective = t.final_objective();
    for (std::size_t k = 0; k < 4; ++k) s.final_all[k] = global_measure(t.final_state, kAllMeasures[k]).total;
    s.total_proposals = t.total_proposals;
    s.accepted = t.accepted_steps.size();
    s.final_amplitudes.assign(t.final_state.amplitudes().begin(), t.final_state.amplitudes().end());
    result.runs.push_back(s);
    if (i == 0 || s.final_objective > result.runs[result.best_index].final_objective) result.best_index = i;
  }
  result.best = std::move(*traces[result.best_index]);
  return result;
}

std::string trace_to_json(const SearchTrace& t) {
  nlohmann::json doc;
  const SearchConfig& c = t.config;
  doc["config"] = {{"n", c.n},
                   {"kind", to_string(c.kind)},
                   {"move_rule", to_string(c.move_rule)},
                   {"delta_init", c.delta_init},
                   {"rejection_window", c.rejection_window},
                   {"delta_floor", c.delta_floor},
                   {"seed", c.seed},
                   {"initial_state", to_string(c.initial_state)},
                   {"brown_factor_max", c.brown_factor_max}};
  doc["initial_objective"] = t.initial_objective;
  doc["total_proposals"] = t.total_proposals;
  doc["halvings"] = t.halvings;
  auto& steps = doc["accepted_steps"] = nlohmann::json::array();
  for (const auto& s : t.accepted_steps) steps.push_back({s.step, s.delta_max, s.objective});
  doc["final_objective"] = t.final_objective();
  doc["final_report"] = nlohmann::json::parse(report_to_json(t.final_report));
  doc["final_state"] = nlohmann::json::parse(format_state_json(t.final_state));
  return doc.dump(2);
}

std::string trace_to_csv(const SearchTrace& t) {
  std::string out = "step,delta_max,objective\n";
  char buf[96];
  for (const auto& s : t.accepted_steps) {
    std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g\n", static_cast<unsigned long long>(s.step), s.delta_max,
                  s.objective);
    out += buf;
  }
  return out;
}

std::string restarts_to_csv(const std::vector<RestartSummary>& runs) {
  std::string out = "seed,final_objective,E_L,E_VN,E_R,E_N,proposals,accepted\n";
  char buf[256];
  for (const auto& r : runs) {
    std::snprintf(buf, sizeof buf, "%llu,%.12g,%.12g,%.12g,%.12g,%.12g,%llu,%zu\n",
                  static_cast<unsigned long long>(r.seed), r.final_objective, r.final_all[0], r.final_all[1],
                  r.final_all[2], r.final_all[3], static_cast<unsigned long long>(r.total_proposals), r.accepted);
    out += buf;
  }
  return out;
}

}  // namespace qent
