// qent command-line frontend. Talks to the library only through qent.h.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qent/qent.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kDimension = 3, kConfig = 4 };

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(qent_status s) {
  switch (s) {
    case QENT_OK: return kOk;
    case QENT_ERR_PARSE:
    case QENT_ERR_NORM_OUT_OF_TOLERANCE:
    case QENT_ERR_UNKNOWN_NAME:
    case QENT_ERR_IO: return kParse;
    case QENT_ERR_DIMENSION_MISMATCH:
    case QENT_ERR_LENGTH_MISMATCH:
    case QENT_ERR_INVALID_ARITY:
    case QENT_ERR_ZERO_VECTOR:
    case QENT_ERR_INVALID_SUBSET: return kDimension;
    case QENT_ERR_INVALID_CONFIG:
    case QENT_ERR_INVALID_ARGUMENT: return kConfig;
    default: return kVerifyFailed;
  }
}

void check(qent_status s, const std::string& context = {}) {
  if (s == QENT_OK) return;
  std::string msg = qent_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw CliError{exit_code_for(s), msg};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  qent_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using State = std::unique_ptr<qent_state, Deleter<qent_state, qent_state_free>>;
using Report = std::unique_ptr<qent_report, Deleter<qent_report, qent_report_free>>;
using SearchResult = std::unique_ptr<qent_search_result, Deleter<qent_search_result, qent_search_result_free>>;
using Hist = std::unique_ptr<qent_histogram, Deleter<qent_histogram, qent_histogram_free>>;
using VerifyResult = std::unique_ptr<qent_verify_result, Deleter<qent_verify_result, qent_verify_result_free>>;

qent_measure parse_kind(const std::string& text) {
  qent_measure k;
  if (qent_parse_measure(text.c_str(), &k) != QENT_OK) throw CliError{kConfig, "unknown measure: " + text};
  return k;
}

fs::path output_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("QENT_OUT_DIR"); env && *env) return env;
  return "qent_out";
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw CliError{kParse, "cannot write " + path.string()};
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string join_lines(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += s + "\n";
  return out;
}

// Run manifest written beside every artifact set.
struct Manifest {
  std::string command;
  json config;
  std::uint64_t seed = 0;
  std::vector<std::string> files;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void write(const fs::path& dir, const std::vector<std::string>& argv) const {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json doc{{"command", command},
             {"argv", argv},
             {"config", config},
             {"seed", seed},
             {"versions", {{"qent", qent_version()}, {"manifest", 1}}},
             {"wall_seconds", secs},
             {"files", files}};
    write_file(dir / "manifest.json", doc.dump(2) + "\n");
  }
};

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string catalog, file, kind = "vn", out;
  bool all = false, per_bipartition = false, as_json = false;
  int mixedness = 0;
};

State load_source(const EvaluateArgs& a) {
  if (a.catalog.empty() == a.file.empty()) throw CliError{kConfig, "give exactly one of --catalog or --file"};
  qent_state* s = nullptr;
  if (!a.catalog.empty())
    check(qent_state_catalog(a.catalog.c_str(), &s), "catalog state " + a.catalog);
  else
    check(qent_state_load(a.file.c_str(), &s), "state file " + a.file);
  return State(s);
}

int cmd_evaluate(const EvaluateArgs& a) {
  const State s = load_source(a);
  const int n = qent_state_qubits(s.get());
  std::vector<qent_measure> kinds;
  if (a.all)
    kinds = {QENT_LINEAR, QENT_VON_NEUMANN, QENT_RENYI_INF, QENT_NEGATIVITY};
  else
    kinds = {parse_kind(a.kind)};
  if (n < 2 && (a.all || !kinds.empty()))
    throw CliError{kDimension, "global measures need at least 2 qubits, state has " + std::to_string(n)};

  json doc{{"qubits", n}, {"measures", json::object()}};
  std::string text;
  for (qent_measure k : kinds) {
    qent_report* raw = nullptr;
    check(qent_global_measure(s.get(), k, &raw));
    const Report r(raw);
    const double total = qent_report_total(r.get());
    text += std::string(qent_measure_label(k)) + "=" + num(total) + "\n";
    if (a.per_bipartition) {
      text += "  subset_mask subset_size value\n";
      for (size_t i = 0; i < qent_report_count(r.get()); ++i) {
        unsigned mask;
        int size;
        double v;
        check(qent_report_entry(r.get(), i, &mask, &size, &v));
        text += "  " + std::to_string(mask) + " " + std::to_string(size) + " " + num(v) + "\n";
      }
    }
    doc["measures"][qent_measure_name(k)] = json::parse(take([&] {
      char* out = nullptr;
      check(qent_report_to_json(r.get(), &out));
      return out;
    }()));
  }
  if (a.all) {
    double q;
    check(qent_meyer_wallach(s.get(), &q));
    text += "Q=" + num(q) + "\n";
    doc["Q"] = q;
    for (int m = 1; 2 * m <= n; ++m) {
      double qm;
      check(qent_scott_q(s.get(), m, &qm));
      text += "Q_" + std::to_string(m) + "=" + num(qm) + "\n";
      doc["Q_m"][std::to_string(m)] = qm;
    }
  }
  if (a.mixedness > 0) {
    char* out = nullptr;
    check(qent_mixedness_json(s.get(), a.mixedness, &out));
    const json mixed = json::parse(take(out));
    doc["mixedness"] = mixed;
    for (const auto& row : mixed) {
      text += "m=" + std::to_string(row["m"].get<int>()) + " subsets=" + std::to_string(row["subsets"].get<int>()) +
              " max_mixed_deviation=" + num(row["max_mixed_deviation"].get<double>()) +
              " all_maximally_mixed=" + (row["all_maximally_mixed"].get<bool>() ? "true" : "false") + "\n";
    }
  }
  const std::string rendered = a.as_json ? doc.dump(2) + "\n" : text;
  if (!a.out.empty())
    write_file(a.out, rendered);
  else
    std::cout << rendered;
  return kOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  int n = 3, restarts = 1, window = 500, threads = 0;
  std::string kind = "vn", move_rule = "additive", init = "zero", init_file, out;
  double delta_init = 0.1, floor = 1e-8, brown_factor_max = 2.0;
  std::uint64_t seed = 1;
  bool allow_degenerate = false;
};

int cmd_search(const SearchArgs& a, const std::vector<std::string>& argv) {
  Manifest manifest;
  manifest.command = "search";
  qent_search_config c;
  qent_search_config_default(&c);
  c.n = a.n;
  c.kind = parse_kind(a.kind);
  if (a.move_rule == "additive" || a.move_rule == "add")
    c.move_rule = QENT_MOVE_ADDITIVE;
  else if (a.move_rule == "brown" || a.move_rule == "multiplicative")
    c.move_rule = QENT_MOVE_BROWN;
  else
    throw CliError{kConfig, "unknown move rule: " + a.move_rule};
  if (a.init == "zero" || a.init == "basis_zero")
    c.initial_state = QENT_INIT_BASIS_ZERO;
  else if (a.init == "haar" || a.init == "random")
    c.initial_state = QENT_INIT_RANDOM_HAAR;
  else if (a.init == "file")
    c.initial_state = QENT_INIT_FILE;
  else
    throw CliError{kConfig, "unknown initial state: " + a.init};
  c.delta_init = a.delta_init;
  c.rejection_window = a.window;
  c.delta_floor = a.floor;
  c.seed = a.seed;
  c.brown_factor_max = a.brown_factor_max;
  c.allow_degenerate = a.allow_degenerate;
  if (a.restarts < 1) throw CliError{kConfig, "--restarts must be >= 1"};

  State init_state;
  if (c.initial_state == QENT_INIT_FILE) {
    if (a.init_file.empty()) throw CliError{kConfig, "--init file needs --init-file"};
    qent_state* s = nullptr;
    check(qent_state_load(a.init_file.c_str(), &s), "state file " + a.init_file);
    init_state.reset(s);
    c.initial_file_state = s;
  }

  manifest.seed = a.seed;
  manifest.config = {{"n", a.n},
                     {"kind", qent_measure_name(c.kind)},
                     {"move_rule", a.move_rule},
                     {"init", a.init},
                     {"init_file", a.init_file},
                     {"delta_init", a.delta_init},
                     {"window", a.window},
                     {"floor", a.floor},
                     {"brown_factor_max", a.brown_factor_max},
                     {"allow_degenerate", a.allow_degenerate},
                     {"restarts", a.restarts},
                     {"threads", a.threads}};

  qent_search_result* raw = nullptr;
  check(qent_search_run(&c, a.restarts, a.threads, &raw));
  const SearchResult r(raw);

  for (size_t i = 0; i < qent_search_restart_count(r.get()); ++i) {
    std::uint64_t seed;
    double obj, all4[4];
    check(qent_search_restart(r.get(), i, &seed, &obj, all4));
    std::cout << "seed " << seed << ": " << qent_measure_label(c.kind) << "=" << num(obj) << "  (E_L=" << num(all4[0])
              << " E_VN=" << num(all4[1]) << " E_R=" << num(all4[2]) << " E_N=" << num(all4[3]) << ")\n";
  }
  std::cout << "best seed " << qent_search_best_seed(r.get()) << ": final " << qent_measure_label(c.kind) << "="
            << num(qent_search_best_objective(r.get())) << "\n";

  const fs::path dir = output_dir(a.out);
  fs::create_directories(dir);
  const auto emit = [&](const char* name, qent_status (*fn)(const qent_search_result*, char**)) {
    char* out = nullptr;
    check(fn(r.get(), &out));
    write_file(dir / name, take(out));
    manifest.files.push_back(name);
  };
  emit("trace.json", qent_search_trace_json);
  emit("trace.csv", qent_search_trace_csv);
  emit("restarts.csv", qent_search_restarts_csv);
  qent_state* best = nullptr;
  check(qent_search_best_state(r.get(), &best));
  const State best_state(best);
  check(qent_state_save(best_state.get(), (dir / "final.state").c_str()));
  manifest.files.push_back("final.state");
  manifest.write(dir, argv);
  std::cout << "wrote " << dir.string() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  int n = 3, bins = 200, threads = 0;
  std::string kind = "vn", markers, out;
  long long samples = 100000;
  std::uint64_t seed = 1;
  std::vector<std::string> below_median, above_median;
  bool gnuplot = false;
};

double marker_value(int n, qent_measure kind, const std::string& name) {
  char* out = nullptr;
  check(qent_markers_csv(n, kind, name.c_str(), &out), "marker " + name);
  const std::string csv = take(out);
  const auto comma = csv.rfind(',');
  return std::stod(csv.substr(comma + 1));
}

int cmd_sample(const SampleArgs& a, const std::vector<std::string>& argv) {
  Manifest manifest;
  manifest.command = "sample";
  if (a.samples < 1) throw CliError{kConfig, "--samples must be >= 1"};
  if (a.bins < 2) throw CliError{kConfig, "--bins must be >= 2"};
  if (a.n < 2 || a.n > 7) throw CliError{kConfig, "--n must be in [2, 7]"};
  const qent_measure kind = parse_kind(a.kind);
  const std::string markers = join_lines(split_commas(a.markers));
  manifest.seed = a.seed;
  manifest.config = {{"n", a.n},         {"kind", qent_measure_name(kind)}, {"samples", a.samples},
                     {"bins", a.bins},   {"markers", split_commas(a.markers)}, {"threads", a.threads},
                     {"below_median", a.below_median}, {"above_median", a.above_median}};

  // Marker arity is checked before the expensive sampling.
  std::string markers_csv;
  if (!markers.empty()) {
    char* out = nullptr;
    check(qent_markers_csv(a.n, kind, markers.c_str(), &out), "markers");
    markers_csv = take(out);
  }

  qent_histogram* raw = nullptr;
  check(qent_sample(a.n, kind, static_cast<std::uint64_t>(a.samples), a.bins, a.seed, a.threads, &raw));
  const Hist h(raw);
  const double median = qent_histogram_median(h.get());

  const fs::path dir = output_dir(a.out);
  fs::create_directories(dir);
  char* out = nullptr;
  check(qent_histogram_to_csv(h.get(), &out));
  write_file(dir / "histogram.csv", take(out));
  check(qent_histogram_to_json(h.get(), &out));
  write_file(dir / "histogram.json", take(out));
  manifest.files = {"histogram.csv", "histogram.json"};
  if (!markers.empty()) {
    write_file(dir / "markers.csv", markers_csv);
    manifest.files.push_back("markers.csv");
  }
  if (a.gnuplot) {
    check(qent_gnuplot_script(h.get(), "histogram.csv", markers.c_str(), &out));
    write_file(dir / "plot.gp", take(out));
    manifest.files.push_back("plot.gp");
  }

  std::cout << qent_measure_label(kind) << " n=" << a.n << " samples=" << a.samples << " median=" << num(median)
            << "\n";
  if (!markers_csv.empty()) std::cout << markers_csv;

  bool ok = true;
  const auto assert_rank = [&](const std::vector<std::string>& names, bool above) {
    for (const auto& name : names) {
      const double v = marker_value(a.n, kind, name);
      const bool holds = above ? v > median : v < median;
      ok = ok && holds;
      std::cout << (holds ? "PASS " : "FAIL ") << name << " " << num(v) << (above ? " above" : " below")
                << " median " << num(median) << "\n";
    }
  };
  assert_rank(a.below_median, false);
  assert_rank(a.above_median, true);
  manifest.config["median"] = median;
  manifest.config["assertions_passed"] = ok;
  manifest.write(dir, argv);
  std::cout << "wrote " << dir.string() << "\n";
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- bounds

std::pair<int, int> parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw CliError{kConfig, "--n expects N or LO..HI, got " + text};
  }
}

int cmd_bounds(const std::string& range, bool check_table) {
  const auto [lo, hi] = parse_range(range);
  if (lo < 2 || hi > 10 || lo > hi) throw CliError{kConfig, "--n range must lie within 2..10"};
  const qent_measure kinds[] = {QENT_LINEAR, QENT_VON_NEUMANN, QENT_RENYI_INF, QENT_NEGATIVITY};
  bool ok = true;
  std::printf("%-3s %-16s %-16s %-16s %-16s\n", "n", "E_L", "E_VN", "E_R", "E_N");
  for (int n = lo; n <= hi; ++n) {
    std::printf("%-3d", n);
    for (qent_measure k : kinds) {
      double v;
      check(qent_upper_bound(k, n, &v));
      std::printf(" %-16s", num(v).c_str());
    }
    std::printf("\n");
  }
  if (check_table) {
    int matched = 0, total = 0;
    for (int n = std::max(lo, 3); n <= std::min(hi, 7); ++n)
      for (qent_measure k : kinds) {
        double v, ref;
        check(qent_upper_bound(k, n, &v));
        check(qent_reference_bound(k, n, &ref));
        const bool cell = std::abs(v - ref) <= 1e-6;
        ++total;
        matched += cell;
        if (!cell)
          std::printf("FAIL n=%d %s computed %s published %s\n", n, qent_measure_label(k), num(v).c_str(),
                      num(ref).c_str());
      }
    ok = matched == total;
    std::printf("%s %d/%d cells within 1e-6 of the published table\n", ok ? "PASS" : "FAIL", matched, total);
  }
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- verify

int cmd_verify(bool quick, bool long_run, const std::string& data_dir, const std::string& only,
               const std::string& json_out, int threads) {
  std::vector<int> ids;
  for (const auto& item : split_commas(only)) {
    try {
      ids.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw CliError{kConfig, "--only expects criterion ids, got " + item};
    }
  }
  qent_verify_options o;
  qent_verify_options_default(&o);
  o.quick = quick;
  o.include_long = long_run;
  o.only = ids.empty() ? nullptr : ids.data();
  o.only_count = ids.size();
  o.data_dir = data_dir.empty() ? nullptr : data_dir.c_str();
  o.threads = threads;
  o.on_line = [](const char* line, void*) { std::cout << line << std::endl; };

  qent_verify_result* raw = nullptr;
  check(qent_verify(&o, &raw));
  const VerifyResult r(raw);
  std::vector<int> failed;
  int passed = 0, skipped = 0;
  for (size_t i = 0; i < qent_verify_count(r.get()); ++i) {
    int id, p, s;
    check(qent_verify_entry(r.get(), i, &id, &p, &s));
    if (s)
      ++skipped;
    else if (p)
      ++passed;
    else
      failed.push_back(id);
  }
  if (!json_out.empty()) {
    char* out = nullptr;
    check(qent_verify_to_json(r.get(), &out));
    write_file(json_out, take(out));
  }
  std::cout << "summary: " << passed << " passed, " << failed.size() << " failed, " << skipped << " skipped\n";
  if (!failed.empty()) {
    std::cout << "failing criteria:";
    for (int id : failed) std::cout << " C" << id;
    std::cout << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Bipartition-sum entanglement measures for pure multi-qubit states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qent_version()));

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate global entanglement measures of a state");
  evaluate->add_option("--catalog", ev.catalog, "Catalog state (GHZ3, W4, HS, BSSB5, PSI6QB, REN4, VN7, ...)");
  evaluate->add_option("--file", ev.file, "State file (.state text or .json)");
  evaluate->add_option("--kind", ev.kind, "Measure: linear, vn, renyi, neg")->capture_default_str();
  evaluate->add_flag("--all", ev.all, "All four measures plus Q and Q_m");
  evaluate->add_flag("--per-bipartition", ev.per_bipartition, "Print the per-bipartition table");
  evaluate->add_option("--mixedness", ev.mixedness, "Marginal mixedness report for sizes 1..M");
  evaluate->add_flag("--json", ev.as_json, "JSON output");
  evaluate->add_option("--out", ev.out, "Write output to this file instead of stdout");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Stochastic hill climb for maximally entangled states");
  search->add_option("--n", sa.n, "Qubits")->capture_default_str();
  search->add_option("--kind", sa.kind, "Objective measure")->capture_default_str();
  search->add_option("--seed", sa.seed, "Seed of the first restart")->capture_default_str();
  search->add_option("--restarts", sa.restarts, "Independent runs with seeds seed, seed+1, ...")->capture_default_str();
  search->add_option("--delta-init", sa.delta_init, "Initial perturbation half-width")->capture_default_str();
  search->add_option("--window", sa.window, "Consecutive rejections before halving")->capture_default_str();
  search->add_option("--floor", sa.floor, "Stop once the half-width reaches this")->capture_default_str();
  search->add_option("--move-rule", sa.move_rule, "additive or brown")->capture_default_str();
  search->add_option("--init", sa.init, "zero, haar or file")->capture_default_str();
  search->add_option("--init-file", sa.init_file, "Initial state file for --init file");
  search->add_option("--brown-factor-max", sa.brown_factor_max, "Upper end of the Brown factors")
      ->capture_default_str();
  search->add_flag("--allow-degenerate", sa.allow_degenerate, "Permit the Brown move from |0...0>");
  search->add_option("--threads", sa.threads, "Worker cap (0 = all cores, 1 = sequential)")->capture_default_str();
  search->add_option("--out", sa.out, "Output directory (default $QENT_OUT_DIR or ./qent_out)");

  SampleArgs sm;
  auto* sample = app.add_subcommand("sample", "Distribution of a measure over Haar-random states");
  sample->add_option("--n", sm.n, "Qubits (2..7)")->capture_default_str();
  sample->add_option("--kind", sm.kind, "Measure")->capture_default_str();
  sample->add_option("--samples", sm.samples, "Number of random states")->capture_default_str();
  sample->add_option("--bins", sm.bins, "Histogram bins")->capture_default_str();
  sample->add_option("--seed", sm.seed, "Seed")->capture_default_str();
  sample->add_option("--markers", sm.markers, "Comma-separated marker states");
  sample->add_option("--assert-below-median", sm.below_median, "Fail unless this state lies below the median");
  sample->add_option("--assert-above-median", sm.above_median, "Fail unless this state lies above the median");
  sample->add_flag("--gnuplot", sm.gnuplot, "Also write plot.gp");
  sample->add_option("--threads", sm.threads, "Worker cap (0 = all cores, 1 = sequential)")->capture_default_str();
  sample->add_option("--out", sm.out, "Output directory (default $QENT_OUT_DIR or ./qent_out)");

  std::string range = "3..7";
  bool check_table = false;
  auto* bounds = app.add_subcommand("bounds", "Upper bounds of the four measures");
  bounds->add_option("--n", range, "N or LO..HI")->capture_default_str();
  bounds->add_flag("--check", check_table, "Compare against the published table for n = 3..7");

  bool quick = false, long_run = false;
  std::string data_dir, only, verify_json;
  int verify_threads = 0;
  auto* verify = app.add_subcommand("verify", "Run the reproduction checks");
  verify->add_flag("--quick", quick, "Closed-form checks only");
  verify->add_flag("--long", long_run, "Include the seven-qubit search probe");
  verify->add_option("--data-dir", data_dir, "Directory with ren4.state, vn7.state, reference_values.txt");
  verify->add_option("--only", only, "Comma-separated criterion ids");
  verify->add_option("--json", verify_json, "Write results as JSON to this file");
  verify->add_option("--threads", verify_threads, "Worker cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*evaluate) return cmd_evaluate(ev);
    if (*search) return cmd_search(sa, args);
    if (*sample) return cmd_sample(sm, args);
    if (*bounds) return cmd_bounds(range, check_table);
    if (*verify) return cmd_verify(quick, long_run, data_dir, only, verify_json, verify_threads);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
