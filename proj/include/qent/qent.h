#ifndef QENT_QENT_H
#define QENT_QENT_H

/* C interface to the qent library. All handles are opaque; every function
 * returning qent_status leaves a message retrievable with qent_last_error()
 * on failure. Strings returned through char** are allocated by the library
 * and must be released with qent_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QENT_BUILDING_LIBRARY)
#    define QENT_API __declspec(dllexport)
#  else
#    define QENT_API __declspec(dllimport)
#  endif
#else
#  define QENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qent_status {
  QENT_OK = 0,
  QENT_ERR_INVALID_ARGUMENT = 1,
  QENT_ERR_LENGTH_MISMATCH = 2,
  QENT_ERR_ZERO_VECTOR = 3,
  QENT_ERR_DIMENSION_MISMATCH = 4,
  QENT_ERR_INVALID_SUBSET = 5,
  QENT_ERR_NOT_HERMITIAN = 6,
  QENT_ERR_NOT_PSD = 7,
  QENT_ERR_NO_CONVERGENCE = 8,
  QENT_ERR_UNKNOWN_NAME = 9,
  QENT_ERR_INVALID_ARITY = 10,
  QENT_ERR_PARSE = 11,
  QENT_ERR_NORM_OUT_OF_TOLERANCE = 12,
  QENT_ERR_INVALID_CONFIG = 13,
  QENT_ERR_IO = 14,
  QENT_ERR_NUMERICAL = 15,
  QENT_ERR_INTERNAL = 99
} qent_status;

typedef enum qent_measure {
  QENT_LINEAR = 0,
  QENT_VON_NEUMANN = 1,
  QENT_RENYI_INF = 2,
  QENT_NEGATIVITY = 3
} qent_measure;

typedef enum qent_move_rule { QENT_MOVE_ADDITIVE = 0, QENT_MOVE_BROWN = 1 } qent_move_rule;

typedef enum qent_initial_state {
  QENT_INIT_BASIS_ZERO = 0,
  QENT_INIT_RANDOM_HAAR = 1,
  QENT_INIT_FILE = 2
} qent_initial_state;

typedef struct qent_state qent_state;
typedef struct qent_report qent_report;
typedef struct qent_search_result qent_search_result;
typedef struct qent_histogram qent_histogram;
typedef struct qent_verify_result qent_verify_result;

/* Library */
QENT_API const char* qent_version(void);
QENT_API const char* qent_last_error(void);
QENT_API const char* qent_status_name(qent_status status);
QENT_API void qent_string_free(char* s);
QENT_API qent_status qent_parse_measure(const char* text, qent_measure* out);
QENT_API const char* qent_measure_name(qent_measure kind);
QENT_API const char* qent_measure_label(qent_measure kind);

/* States. Amplitudes are interleaved (re, im) pairs, 2 * 2^n doubles. */
QENT_API qent_status qent_state_from_amplitudes(int n, const double* re_im, size_t count, qent_state** out);
QENT_API qent_status qent_state_catalog(const char* name, qent_state** out);
/* Catalog name or path to a state file. */
QENT_API qent_status qent_state_resolve(const char* name_or_path, qent_state** out);
QENT_API qent_status qent_state_load(const char* path, qent_state** out);
QENT_API qent_status qent_state_save(const qent_state* s, const char* path);
QENT_API qent_status qent_state_haar(int n, uint64_t seed, qent_state** out);
QENT_API int qent_state_qubits(const qent_state* s);
QENT_API size_t qent_state_dim(const qent_state* s);
QENT_API qent_status qent_state_amplitudes(const qent_state* s, double* re_im, size_t count);
QENT_API qent_status qent_state_to_text(const qent_state* s, char** out);
QENT_API void qent_state_free(qent_state* s);
/* Newline-separated catalog names. */
QENT_API qent_status qent_catalog_names(char** out);

/* Measures */
QENT_API qent_status qent_global_measure(const qent_state* s, qent_measure kind, qent_report** out);
QENT_API double qent_report_total(const qent_report* r);
QENT_API size_t qent_report_count(const qent_report* r);
QENT_API qent_status qent_report_entry(const qent_report* r, size_t index, unsigned* subset_mask, int* subset_size,
                                       double* value);
QENT_API qent_status qent_report_to_json(const qent_report* r, char** out);
QENT_API qent_status qent_report_to_csv(const qent_report* r, char** out);
QENT_API void qent_report_free(qent_report* r);

QENT_API qent_status qent_meyer_wallach(const qent_state* s, double* out);
QENT_API qent_status qent_scott_q(const qent_state* s, int m, double* out);
QENT_API qent_status qent_upper_bound(qent_measure kind, int n, double* out);
/* Published bound for 3 <= n <= 7. */
QENT_API qent_status qent_reference_bound(qent_measure kind, int n, double* out);
QENT_API qent_status qent_mixedness_json(const qent_state* s, int m_max, char** out);

/* Search */
typedef struct qent_search_config {
  int n;
  qent_measure kind;
  qent_move_rule move_rule;
  double delta_init;
  int rejection_window;
  double delta_floor;
  uint64_t seed;
  qent_initial_state initial_state;
  const qent_state* initial_file_state; /* used when initial_state == QENT_INIT_FILE */
  double brown_factor_max;
  int allow_degenerate;
} qent_search_config;

QENT_API void qent_search_config_default(qent_search_config* config);
QENT_API qent_status qent_search_run(const qent_search_config* config, int restarts, int threads,
                                     qent_search_result** out);
QENT_API double qent_search_best_objective(const qent_search_result* r);
QENT_API uint64_t qent_search_best_seed(const qent_search_result* r);
QENT_API qent_status qent_search_best_state(const qent_search_result* r, qent_state** out);
QENT_API qent_status qent_search_trace_json(const qent_search_result* r, char** out);
QENT_API qent_status qent_search_trace_csv(const qent_search_result* r, char** out);
QENT_API qent_status qent_search_restarts_csv(const qent_search_result* r, char** out);
QENT_API size_t qent_search_restart_count(const qent_search_result* r);
/* all4 receives the four global measures of that run's final state. */
QENT_API qent_status qent_search_restart(const qent_search_result* r, size_t index, uint64_t* seed, double* objective,
                                         double all4[4]);
QENT_API void qent_search_result_free(qent_search_result* r);

/* Haar-random distributions */
QENT_API qent_status qent_sample(int n, qent_measure kind, uint64_t samples, int bins, uint64_t seed, int threads,
                                 qent_histogram** out);
QENT_API double qent_histogram_median(const qent_histogram* h);
QENT_API qent_status qent_histogram_to_csv(const qent_histogram* h, char** out);
QENT_API qent_status qent_histogram_to_json(const qent_histogram* h, char** out);
/* markers: newline-separated state names or paths. Writes a name,value CSV. */
QENT_API qent_status qent_markers_csv(int n, qent_measure kind, const char* markers, char** out);
QENT_API qent_status qent_gnuplot_script(const qent_histogram* h, const char* csv_path, const char* markers,
                                         char** out);
QENT_API void qent_histogram_free(qent_histogram* h);

/* Acceptance criteria */
typedef struct qent_verify_options {
  int quick;
  int include_long;
  const int* only; /* criterion ids, may be NULL */
  size_t only_count;
  const char* data_dir; /* may be NULL */
  int threads;
  /* Called after each criterion with its formatted line. */
  void (*on_line)(const char* line, void* user);
  void* user;
} qent_verify_options;

QENT_API void qent_verify_options_default(qent_verify_options* options);
QENT_API qent_status qent_verify(const qent_verify_options* options, qent_verify_result** out);
QENT_API size_t qent_verify_count(const qent_verify_result* r);
/* passed / skipped receive 0 or 1. */
QENT_API qent_status qent_verify_entry(const qent_verify_result* r, size_t index, int* id, int* passed, int* skipped);
QENT_API qent_status qent_verify_line(const qent_verify_result* r, size_t index, char** out);
QENT_API qent_status qent_verify_to_json(const qent_verify_result* r, char** out);
QENT_API void qent_verify_result_free(qent_verify_result* r);

#ifdef __cplusplus
}
#endif

#endif
