#include "qent/qent.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qent/distribution.hpp"
#include "qent/error.hpp"
#include "qent/measures.hpp"
#include "qent/reference.hpp"
#include "qent/rng.hpp"
#include "qent/search.hpp"
#include "qent/state.hpp"
#include "qent/verify.hpp"

struct qent_state {
  qent::PureState value;
};
struct qent_report {
  qent::MeasureReport value;
};
struct qent_search_result {
  qent::MultiRestartResult value;
};
struct qent_histogram {
  qent::Histogram value;
};
struct qent_verify_result {
  std::vector<qent::CriterionResult> value;
};

namespace {

thread_local std::string g_last_error;

qent_status fail(qent_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
qent_status guarded(F&& f) noexcept {
  try {
    g_last_error.clear();
    f();
    return QENT_OK;
  } catch (const qent::Error& e) {
    return fail(static_cast<qent_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QENT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QENT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QENT_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw qent::Error(qent::ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

qent::MeasureKind to_kind(qent_measure kind) {
  require(kind >= QENT_LINEAR && kind <= QENT_NEGATIVITY, "unknown measure");
  return qent::kAllMeasures[kind];
}

std::vector<std::string> split_lines(const char* text) {
  std::vector<std::string> out;
  if (!text) return out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

template <class T, class V>
T* box(V&& v) {
  return new T{std::forward<V>(v)};
}

}  // namespace

extern "C" {

const char* qent_version(void) { return "1.0.0"; }

const char* qent_last_error(void) { return g_last_error.c_str(); }

const char* qent_status_name(qent_status status) {
  if (status == QENT_OK) return "OK";
  if (status == QENT_ERR_INTERNAL) return "INTERNAL";
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(qent::ErrorCode::Numerical)) return "UNKNOWN";
  return qent::to_string(static_cast<qent::ErrorCode>(code));
}

void qent_string_free(char* s) { std::free(s); }

qent_status qent_parse_measure(const char* text, qent_measure* out) {
  return guarded([&] {
    require(text && out, "null argument");
    const auto kind = qent::parse_measure_kind(text);
    if (!kind) throw qent::Error(qent::ErrorCode::UnknownName, std::string("unknown measure: ") + text);
    *out = static_cast<qent_measure>(*kind);
  });
}

const char* qent_measure_name(qent_measure kind) {
  if (kind < QENT_LINEAR || kind > QENT_NEGATIVITY) return "UNKNOWN";
  return qent::to_string(qent::kAllMeasures[kind]);
}

const char* qent_measure_label(qent_measure kind) {
  if (kind < QENT_LINEAR || kind > QENT_NEGATIVITY) return "?";
  return qent::short_label(qent::kAllMeasures[kind]);
}

qent_status qent_state_from_amplitudes(int n, const double* re_im, size_t count, qent_state** out) {
  return guarded([&] {
    require(out && (re_im || count == 0), "null argument");
    require(count % 2 == 0, "amplitude array must hold (re, im) pairs");
    std::vector<qent::complex> amps(count / 2);
    for (size_t i = 0; i < amps.size(); ++i) amps[i] = {re_im[2 * i], re_im[2 * i + 1]};
    *out = box<qent_state>(qent::PureState::from_amplitudes(n, std::move(amps)));
  });
}

qent_status qent_state_catalog(const char* name, qent_state** out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = box<qent_state>(qent::catalog_state(name));
  });
}

qent_status qent_state_resolve(const char* name_or_path, qent_state** out) {
  return guarded([&] {
    require(name_or_path && out, "null argument");
    *out = box<qent_state>(qent::resolve_state(name_or_path));
  });
}

qent_status qent_state_load(const char* path, qent_state** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = box<qent_state>(qent::load_state(path));
  });
}

qent_status qent_state_save(const qent_state* s, const char* path) {
  return guarded([&] {
    require(s && path, "null argument");
    qent::save_state(s->value, path);
  });
}

qent_status qent_state_haar(int n, uint64_t seed, qent_state** out) {
  return guarded([&] {
    require(out, "null argument");
    if (n < 1 || n > qent::kMaxQubits)
      throw qent::Error(qent::ErrorCode::InvalidArity, "n out of range: " + std::to_string(n));
    qent::Rng rng = qent::make_rng(seed);
    *out = box<qent_state>(qent::haar_random_state(n, rng));
  });
}

int qent_state_qubits(const qent_state* s) { return s ? s->value.qubits() : 0; }

size_t qent_state_dim(const qent_state* s) { return s ? s->value.dim() : 0; }

qent_status qent_state_amplitudes(const qent_state* s, double* re_im, size_t count) {
  return guarded([&] {
    require(s && re_im, "null argument");
    if (count != 2 * s->value.dim())
      throw qent::Error(qent::ErrorCode::LengthMismatch, "buffer must hold " + std::to_string(2 * s->value.dim()) +
                                                             " doubles");
    for (size_t i = 0; i < s->value.dim(); ++i) {
      re_im[2 * i] = s->value[i].real();
      re_im[2 * i + 1] = s->value[i].imag();
    }
  });
}

qent_status qent_state_to_text(const qent_state* s, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = dup(qent::format_state_text(s->value));
  });
}

void qent_state_free(qent_state* s) { delete s; }

qent_status qent_catalog_names(char** out) {
  return guarded([&] {
    require(out, "null argument");
    std::string text;
    for (const auto& name : qent::catalog_names()) text += name + "\n";
    *out = dup(text);
  });
}

qent_status qent_global_measure(const qent_state* s, qent_measure kind, qent_report** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = box<qent_report>(qent::global_measure(s->value, to_kind(kind)));
  });
}

double qent_report_total(const qent_report* r) { return r ? r->value.total : 0.0; }

size_t qent_report_count(const qent_report* r) { return r ? r->value.per_bipartition.size() : 0; }

qent_status qent_report_entry(const qent_report* r, size_t index, unsigned* subset_mask, int* subset_size,
                              double* value) {
  return guarded([&] {
    require(r, "null argument");
    require(index < r->value.per_bipartition.size(), "index out of range");
    const auto& [b, v] = r->value.per_bipartition[index];
    if (subset_mask) *subset_mask = b.subset;
    if (subset_size) *subset_size = b.size();
    if (value) *value = v;
  });
}

qent_status qent_report_to_json(const qent_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(qent::report_to_json(r->value));
  });
}

qent_status qent_report_to_csv(const qent_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(qent::report_to_csv(r->value));
  });
}

void qent_report_free(qent_report* r) { delete r; }

qent_status qent_meyer_wallach(const qent_state* s, double* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = qent::meyer_wallach_q(s->value);
  });
}

qent_status qent_scott_q(const qent_state* s, int m, double* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = qent::scott_q_m(s->value, m);
  });
}

qent_status qent_upper_bound(qent_measure kind, int n, double* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = qent::upper_bound(to_kind(kind), n);
  });
}

qent_status qent_reference_bound(qent_measure kind, int n, double* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = qent::ReferenceValues::bundled().bound(to_kind(kind), n);
  });
}

qent_status qent_mixedness_json(const qent_state* s, int m_max, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = dup(qent::mixedness_to_json(qent::marginal_mixedness_report(s->value, m_max)));
  });
}

void qent_search_config_default(qent_search_config* config) {
  if (!config) return;
  const qent::SearchConfig d;
  config->n = d.n;
  config->kind = static_cast<qent_measure>(d.kind);
  config->move_rule = static_cast<qent_move_rule>(d.move_rule);
  config->delta_init = d.delta_init;
  config->rejection_window = d.rejection_window;
  config->delta_floor = d.delta_floor;
  config->seed = d.seed;
  config->initial_state = static_cast<qent_initial_state>(d.initial_state);
  config->initial_file_state = nullptr;
  config->brown_factor_max = d.brown_factor_max;
  config->allow_degenerate = d.allow_degenerate;
}

qent_status qent_search_run(const qent_search_config* config, int restarts, int threads, qent_search_result** out) {
  return guarded([&] {
    require(config && out, "null argument");
    if (config->move_rule != QENT_MOVE_ADDITIVE && config->move_rule != QENT_MOVE_BROWN)
      throw qent::Error(qent::ErrorCode::InvalidConfig, "move_rule: unknown value");
    if (config->initial_state < QENT_INIT_BASIS_ZERO || config->initial_state > QENT_INIT_FILE)
      throw qent::Error(qent::ErrorCode::InvalidConfig, "initial_state: unknown value");
    if (config->kind < QENT_LINEAR || config->kind > QENT_NEGATIVITY)
      throw qent::Error(qent::ErrorCode::InvalidConfig, "kind: unknown value");
    qent::SearchConfig c;
    c.n = config->n;
    c.kind = qent::kAllMeasures[config->kind];
    c.move_rule = static_cast<qent::MoveRule>(config->move_rule);
    c.delta_init = config->delta_init;
    c.rejection_window = config->rejection_window;
    c.delta_floor = config->delta_floor;
    c.seed = config->seed;
    c.initial_state = static_cast<qent::InitialState>(config->initial_state);
    if (config->initial_file_state) c.initial_file_state = config->initial_file_state->value;
    c.brown_factor_max = config->brown_factor_max;
    c.allow_degenerate = config->allow_degenerate != 0;
    *out = box<qent_search_result>(qent::multi_restart(c, restarts, threads));
  });
}

double qent_search_best_objective(const qent_search_result* r) { return r ? r->value.best.final_objective() : 0.0; }

uint64_t qent_search_best_seed(const qent_search_result* r) { return r ? r->value.best.config.seed : 0; }

qent_status qent_search_best_state(const qent_search_result* r, qent_state** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = box<qent_state>(r->value.best.final_state);
  });
}

qent_status qent_search_trace_json(const qent_search_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(qent::trace_to_json(r->value.best));
  });
}

qent_status qent_search_trace_csv(const qent_search_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(qent::trace_to_csv(r->value.best));
  });
}

qent_status qent_search_restarts_csv(const qent_search_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(qent::restarts_to_csv(r->value.runs));
  });
}

size_t qent_search_restart_count(const qent_search_result* r) { return r ? r->value.runs.size() : 0; }

qent_status qent_search_restart(const qent_search_result* r, size_t index, uint64_t* seed, double* objective,
                                double all4[4]) {
  return guarded([&] {
    require(r, "null argument");
    require(index < r->value.runs.size(), "index out of range");
    const auto& run = r->value.runs[index];
    if (seed) *seed = run.seed;
    if (objective) *objective = run.final_objective;
    if (all4)
      for (int k = 0; k < 4; ++k) all4[k] = run.final_all[static_cast<size_t>(k)];
  });
}

void qent_search_result_free(qent_search_result* r) { delete r; }

qent_status qent_sample(int n, qent_measure kind, uint64_t samples, int bins, uint64_t seed, int threads,
                        qent_histogram** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = box<qent_histogram>(qent::sample_distribution(n, to_kind(kind), samples, bins, seed, threads));
  });
}

double qent_histogram_median(const qent_histogram* h) { return h ? h->value.median : 0.0; }

qent_status qent_histogram_to_csv(const qent_histogram* h, char** out) {
  return guarded([&] {
    require(h && out, "null argument");
    *out = dup(qent::histogram_to_csv(h->value));
  });
}

qent_status qent_histogram_to_json(const qent_histogram* h, char** out) {
  return guarded([&] {
    require(h && out, "null argument");
    *out = dup(qent::histogram_to_json(h->value));
  });
}

qent_status qent_markers_csv(int n, qent_measure kind, const char* markers, char** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = dup(qent::markers_to_csv(qent::marker_values(n, to_kind(kind), split_lines(markers))));
  });
}

qent_status qent_gnuplot_script(const qent_histogram* h, const char* csv_path, const char* markers, char** out) {
  return guarded([&] {
    require(h && csv_path && out, "null argument");
    const auto values = qent::marker_values(h->value.n, h->value.kind, split_lines(markers));
    *out = dup(qent::gnuplot_script(h->value, csv_path, values));
  });
}

void qent_histogram_free(qent_histogram* h) { delete h; }

void qent_verify_options_default(qent_verify_options* options) {
  if (!options) return;
  *options = qent_verify_options{};
}

qent_status qent_verify(const qent_verify_options* options, qent_verify_result** out) {
  return guarded([&] {
    require(options && out, "null argument");
    require(options->only || options->only_count == 0, "null criterion list");
    qent::VerifyOptions o;
    o.quick = options->quick != 0;
    o.include_long = options->include_long != 0;
    for (size_t i = 0; i < options->only_count; ++i) {
      const int id = options->only[i];
      if (id < 1 || id > qent::kCriterionCount)
        throw qent::Error(qent::ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
      o.only.insert(id);
    }
    if (options->data_dir) o.data_dir = options->data_dir;
    o.threads = options->threads;
    if (options->on_line) {
      auto* cb = options->on_line;
      void* user = options->user;
      o.on_result = [cb, user](const qent::CriterionResult& r) { cb(qent::format_criterion_line(r).c_str(), user); };
    }
    *out = box<qent_verify_result>(qent::run_verification(o));
  });
}

size_t qent_verify_count(const qent_verify_result* r) { return r ? r->value.size() : 0; }

qent_status qent_verify_entry(const qent_verify_result* r, size_t index, int* id, int* passed, int* skipped) {
  return guarded([&] {
    require(r, "null argument");
    require(index < r->value.size(), "index out of range");
    const auto& c = r->value[index];
    if (id) *id = c.id;
    if (passed) *passed = c.passed;
    if (skipped) *skipped = c.skipped;
  });
}

qent_status qent_verify_line(const qent_verify_result* r, size_t index, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    require(index < r->value.size(), "index out of range");
    *out = dup(qent::format_criterion_line(r->value[index]));
  });
}

qent_status qent_verify_to_json(const qent_verify_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& c : r->value)
      doc.push_back({{"id", c.id},
                     {"name", c.name},
                     {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")},
                     {"observed", c.observed},
                     {"expected", c.expected},
                     {"detail", c.detail},
                     {"seconds", c.seconds}});
    *out = dup(doc.dump(2));
  });
}

void qent_verify_result_free(qent_verify_result* r) { delete r; }

}  // extern "C"
