#include "qent/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qent/distribution.hpp"
#include "qent/error.hpp"
#include "qent/reference.hpp"
#include "qent/rng.hpp"
#include "qent/search.hpp"

namespace qent {

namespace {

using Clock = std::chrono::steady_clock;

std::string num(double v, int digits = 10) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct Context {
  const VerifyOptions& options;
  ReferenceValues reference;

  PureState bundled_state(const char* file, const char* catalog_name) const {
    if (options.data_dir) return load_state(*options.data_dir / file);
    return catalog_state(catalog_name);
  }
};

// Accumulates sub-checks; the criterion passes iff all of them do.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  void near(const std::string& label, double observed, double expected, double tol) {
    const double diff = std::abs(observed - expected);
    observed_ += (observed_.empty() ? "" : " ") + label + "=" + num(observed);
    expected_ += (expected_.empty() ? "" : " ") + label + "=" + num(expected) + "±" + num(tol, 2);
    expect(diff <= tol, label + " off by " + num(diff, 3));
  }
  void note(const std::string& text) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += text;
  }
  void observed(const std::string& s) { observed_ += (observed_.empty() ? "" : " ") + s; }
  void expected(const std::string& s) { expected_ += (expected_.empty() ? "" : " ") + s; }

  void fill(CriterionResult& r) const {
    r.passed = passed_;
    r.observed = observed_;
    r.expected = expected_;
    r.detail = failures_;
    if (!notes_.empty()) r.detail += (r.detail.empty() ? "" : " | ") + notes_;
  }

 private:
  bool passed_ = true;
  std::string observed_, expected_, failures_, notes_;
};

std::array<double, 4> all_totals(const PureState& s) {
  std::array<double, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = global_measure(s, kAllMeasures[k]).total;
  return out;
}

// Largest Frobenius distance of any size-m marginal from I / 2^m.
double max_mixed_deviation(const PureState& s, int m) {
  return marginal_mixedness_report(s, m).back().max_mixed_deviation;
}

void criterion_bounds(const Context& ctx, Checks& c) {
  const auto start = Clock::now();
  int matched = 0;
  for (int n = 3; n <= 7; ++n)
    for (MeasureKind k : kAllMeasures) {
      const double got = upper_bound(k, n), want = ctx.reference.bound(k, n);
      const bool ok = std::abs(got - want) <= 1e-6;
      matched += ok;
      c.expect(ok, std::string(short_label(k)) + "(" + std::to_string(n) + ")=" + num(got) + " vs " + num(want));
    }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.observed(std::to_string(matched) + "/20 cells, " + num(secs, 3) + " s");
  c.expected("20/20 cells within 1e-6, < 1 s");
  c.expect(secs < 1.0, "runtime " + num(secs, 3) + " s");
}

void criterion_ghz3(const Context&, Checks& c) {
  const auto v = all_totals(ghz_state(3));
  const double expected[] = {1.5, 3.0, 3.0 * std::numbers::ln2, 1.5};
  for (std::size_t k = 0; k < 4; ++k) c.near(short_label(kAllMeasures[k]), v[k], expected[k], 1e-9);
}

void criterion_hs(const Context& ctx, Checks& c) {
  const double evn = global_measure(catalog_state("HS"), MeasureKind::VonNeumann).total;
  c.near("E_VN", evn, ctx.reference.at("hs.VON_NEUMANN"), 1e-5);
  c.note("exact value 5.5 + 1.5*log2(6) = " + num(5.5 + 1.5 * std::log2(6.0), 12));
}

void criterion_bssb5(const Context& ctx, Checks& c) {
  const PureState s = catalog_state("BSSB5");
  const auto report = marginal_mixedness_report(s, 2);
  for (const auto& m : report) {
    c.observed("dev" + std::to_string(m.m) + "=" + num(m.max_mixed_deviation, 3));
    c.expect(m.max_mixed_deviation < 1e-10,
             std::to_string(m.m) + "-qubit marginals not maximally mixed (" + num(m.max_mixed_deviation, 3) + ")");
  }
  c.expected("dev1,dev2<1e-10");
  const auto v = all_totals(s);
  for (std::size_t k = 0; k < 4; ++k)
    c.near(short_label(kAllMeasures[k]), v[k], ctx.reference.best(kAllMeasures[k], 5), 1e-5);
}

void criterion_psi6(const Context& ctx, Checks& c) {
  const PureState s = catalog_state("PSI6QB");
  for (const auto& m : marginal_mixedness_report(s, 3)) {
    c.observed("dev" + std::to_string(m.m) + "=" + num(m.max_mixed_deviation, 3));
    c.expect(m.all_maximally_mixed, std::to_string(m.m) + "-qubit marginals not maximally mixed");
  }
  c.expected("dev1..3<1e-8");
  const auto v = all_totals(s);
  c.near("E_L", v[0], 23.0, 1e-9);
  c.near("E_VN", v[1], 66.0, 1e-9);
  c.near("E_N", v[3], 60.5, 1e-9);
  c.near("E_R", v[2], ctx.reference.bound(MeasureKind::RenyiInf, 6), 1e-5);
}

void criterion_ren4(const Context& ctx, Checks& c) {
  const PureState s = ctx.bundled_state("ren4.state", "REN4");
  c.expect(s.qubits() == 4, "REN4 must have 4 qubits");
  const double er = global_measure(s, MeasureKind::RenyiInf).total;
  c.near("E_R", er, ctx.reference.best(MeasureKind::RenyiInf, 4), 1e-4);
}

void criterion_vn7(const Context& ctx, Checks& c) {
  const auto start = Clock::now();
  const PureState s = ctx.bundled_state("vn7.state", "VN7");
  c.expect(s.qubits() == 7, "VN7 must have 7 qubits");
  const auto v = all_totals(s);
  for (std::size_t k = 0; k < 4; ++k)
    c.near(short_label(kAllMeasures[k]), v[k], ctx.reference.best(kAllMeasures[k], 7), 1e-3);

  const double dev1 = max_mixed_deviation(s, 1);
  c.observed("dev1=" + num(dev1, 3));
  c.expected("dev1<=1e-6");
  c.expect(dev1 <= 1e-6, "single-qubit marginals not maximally mixed");

  // Every size-m marginal against the published entropies.
  for (int m = 2; m <= 3; ++m) {
    const std::string prefix = "vn7_marginal." + std::to_string(m) + ".";
    const double want[] = {ctx.reference.at(prefix + "LINEAR"), ctx.reference.at(prefix + "VON_NEUMANN"),
                           ctx.reference.at(prefix + "RENYI_INF")};
    std::array<double, 3> worst{};
    std::size_t matching = 0, total = 0;
    for (unsigned mask : subsets_of_size(7, m)) {
      std::vector<double> lambda = schmidt_spectrum(s, Bipartition{7, mask});
      const double got[] = {linear_entropy(lambda), von_neumann_entropy(lambda), renyi_inf_entropy(lambda)};
      bool all = true;
      for (std::size_t i = 0; i < 3; ++i) {
        const double d = std::abs(got[i] - want[i]);
        worst[i] = std::max(worst[i], d);
        all = all && d <= 1e-4;
      }
      matching += all;
      ++total;
    }
    c.observed(std::to_string(m) + "-qubit: " + std::to_string(matching) + "/" + std::to_string(total) + " match");
    c.expected(std::to_string(m) + "-qubit: all within 1e-4");
    c.expect(matching == total, std::to_string(total - matching) + " of " + std::to_string(total) + " " +
                                    std::to_string(m) + "-qubit marginals off (max |dS_L|=" + num(worst[0], 3) +
                                    " |dS_VN|=" + num(worst[1], 3) + " |dS_R|=" + num(worst[2], 3) + ")");
    const SizeSummary summary = marginal_mixedness_report(s, m).back();
    c.note(std::to_string(m) + "-qubit minima S_L=" + num(summary.linear.min) +
           " S_VN=" + num(summary.von_neumann.min) + " S_R=" + num(summary.renyi_inf.min));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(secs < 30.0, "runtime " + num(secs, 3) + " s");
}

void criterion_negativity_oracle(const Context&, Checks& c) {
  const auto start = Clock::now();
  Rng rng = make_rng(20070801);
  double worst = 0.0;
  std::size_t pairs = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 4;
    const PureState s = haar_random_state(n, rng);
    for (const auto& b : enumerate_bipartitions(n)) {
      worst = std::max(worst, std::abs(negativity(s, b) - negativity_oracle(s, b)));
      ++pairs;
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.observed("max|diff|=" + num(worst, 3) + " over " + std::to_string(pairs) + " bipartitions, " + num(secs, 3) + " s");
  c.expected("max|diff|<=1e-9, < 120 s");
  c.expect(worst <= 1e-9, "max difference " + num(worst, 3));
  c.expect(secs < 120.0, "runtime " + num(secs, 3) + " s");
}

void criterion_search(const Context& ctx, Checks& c) {
  const auto start = Clock::now();
  const auto run = [&](int n, MeasureKind kind) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.kind = kind;
    cfg.seed = 1;
    return multi_restart(cfg, 10, ctx.options.threads).runs;
  };

  // (a) three qubits, von Neumann
  {
    const auto runs = run(3, MeasureKind::VonNeumann);
    const auto ok = std::count_if(runs.begin(), runs.end(), [](const auto& r) { return r.final_objective >= 2.9999; });
    c.observed("(a) " + std::to_string(ok) + "/10");
    c.expect(ok == 10, "(a) only " + std::to_string(ok) + "/10 seeds reach 2.9999");
  }
  // (b) four qubits, von Neumann
  {
    const auto runs = run(4, MeasureKind::VonNeumann);
    const auto ok = std::count_if(runs.begin(), runs.end(), [](const auto& r) { return r.final_objective >= 9.3763; });
    c.observed("(b) " + std::to_string(ok) + "/10");
    c.expect(ok >= 7, "(b) only " + std::to_string(ok) + "/10 seeds reach 9.3763");
  }
  // (c) five qubits, every objective: the found state shows all four maxima.
  for (MeasureKind kind : kAllMeasures) {
    const auto runs = run(5, kind);
    const auto ok = std::count_if(runs.begin(), runs.end(), [&](const auto& r) {
      for (std::size_t k = 0; k < 4; ++k)
        if (std::abs(r.final_all[k] - ctx.reference.best(kAllMeasures[k], 5)) > 1e-3) return false;
      return true;
    });
    c.observed("(c," + std::string(short_label(kind)) + ") " + std::to_string(ok) + "/10");
    c.expect(ok >= 7, "(c) objective " + std::string(short_label(kind)) + ": only " + std::to_string(ok) + "/10");
  }
  // (d) four qubits, linear: all reach 4 but the states differ.
  {
    const auto runs = run(4, MeasureKind::Linear);
    const bool all_four = std::all_of(runs.begin(), runs.end(),
                                      [](const auto& r) { return std::abs(r.final_objective - 4.0) <= 1e-4; });
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& r : runs) {
      lo = std::min(lo, r.final_all[1]);
      hi = std::max(hi, r.final_all[1]);
    }
    c.observed("(d) E_VN spread=" + num(hi - lo, 4));
    c.expect(all_four, "(d) not every E_L run within 1e-4 of 4");
    c.expect(hi - lo > 1e-3, "(d) E_VN values of E_L maximizers do not differ");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.observed(num(secs, 4) + " s");
  c.expected("(a) 10/10 (b)>=7 (c)>=7 per objective (d) spread>1e-3, < 1200 s");
  c.expect(secs < 1200.0, "runtime " + num(secs, 4) + " s");
}

void criterion_distribution(const Context& ctx, Checks& c) {
  constexpr std::uint64_t kSamples = 100000;
  constexpr std::uint64_t kSeed = 2007;
  struct Claim {
    int n;
    const char* state;
    MeasureKind kind;
    bool above;
  };
  const Claim claims[] = {
      {4, "GHZ4", MeasureKind::Negativity, false}, {4, "GHZ4", MeasureKind::RenyiInf, true},
      {5, "GHZ5", MeasureKind::Linear, false},     {5, "GHZ5", MeasureKind::VonNeumann, false},
      {5, "GHZ5", MeasureKind::Negativity, false}, {5, "GHZ5", MeasureKind::RenyiInf, true},
      {3, "W3", MeasureKind::Linear, true},        {3, "W3", MeasureKind::VonNeumann, true},
      {3, "W3", MeasureKind::RenyiInf, true},      {3, "W3", MeasureKind::Negativity, true},
  };
  int ok = 0;
  for (const Claim& cl : claims) {
    const Histogram h = sample_distribution(cl.n, cl.kind, kSamples, 200, kSeed, ctx.options.threads);
    const double value = global_measure(catalog_state(cl.state), cl.kind).total;
    const bool holds = cl.above ? value > h.median : value < h.median;
    ok += holds;
    c.expect(holds, std::string(cl.state) + " " + short_label(cl.kind) + "=" + num(value, 6) +
                        (cl.above ? " not above" : " not below") + " median " + num(h.median, 6));
    c.note(std::string(cl.state) + " " + short_label(cl.kind) + " " + num(value, 6) + " vs median " + num(h.median, 6));
  }
  c.observed(std::to_string(ok) + "/10 rank claims");
  c.expected("10/10");
}

void criterion_seven_qubit_probe(const Context& ctx, Checks& c) {
  const auto start = Clock::now();
  SearchConfig cfg;
  cfg.n = 7;
  cfg.kind = MeasureKind::VonNeumann;
  cfg.seed = 1;
  const auto result = multi_restart(cfg, 10, ctx.options.threads);
  int single_ok = 0, not_all_mixed = 0, clustered = 0;
  double worst_cluster = 0.0;
  for (int i = 0; i < 10; ++i) {
    const RestartSummary& run = result.runs[static_cast<std::size_t>(i)];
    const PureState s = PureState::from_amplitudes(7, run.final_amplitudes);
    const auto report = marginal_mixedness_report(s, 3);
    single_ok += report[0].max_mixed_deviation <= 1e-4;
    not_all_mixed += report[1].max_mixed_deviation > 1e-2 && report[2].max_mixed_deviation > 1e-2;

    bool cluster = true;
    for (int m = 2; m <= 3; ++m) {
      const std::string prefix = "vn7_marginal." + std::to_string(m) + ".";
      const double want[] = {ctx.reference.at(prefix + "LINEAR"), ctx.reference.at(prefix + "VON_NEUMANN"),
                             ctx.reference.at(prefix + "RENYI_INF")};
      const SizeSummary& sm = report[static_cast<std::size_t>(m - 1)];
      const EntropyStats* stats[] = {&sm.linear, &sm.von_neumann, &sm.renyi_inf};
      for (std::size_t k = 0; k < 3; ++k) {
        const double d = std::max(std::abs(stats[k]->min - want[k]), std::abs(stats[k]->max - want[k]));
        worst_cluster = std::max(worst_cluster, d);
        cluster = cluster && d <= 1e-2;
      }
    }
    clustered += cluster;
    c.note("seed " + std::to_string(run.seed) + ": E_VN=" + num(run.final_objective) +
           " dev1=" + num(report[0].max_mixed_deviation, 3) + " dev2=" + num(report[1].max_mixed_deviation, 3) +
           " dev3=" + num(report[2].max_mixed_deviation, 3) + " S_R2=[" + num(report[1].renyi_inf.min, 6) + "," +
           num(report[1].renyi_inf.max, 6) + "]");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.observed("single-mixed " + std::to_string(single_ok) + "/10, not-all-mixed " + std::to_string(not_all_mixed) +
             "/10, clustered " + std::to_string(clustered) + "/10 (worst " + num(worst_cluster, 3) + "), " +
             num(secs, 4) + " s");
  c.expected("10/10, 10/10, 10/10 within 1e-2, < 7200 s");
  c.expect(single_ok == 10, "single-qubit marginals not maximally mixed in every run");
  c.expect(not_all_mixed == 10, "some run has all 2- or 3-qubit marginals maximally mixed");
  c.expect(clustered == 10, "2-/3-qubit marginal entropies spread beyond 1e-2 of the published values (worst " +
                                num(worst_cluster, 3) + ")");
  c.expect(secs < 7200.0, "runtime " + num(secs, 4) + " s");
}

struct CriterionDef {
  int id;
  const char* name;
  bool closed_form;
  void (*run)(const Context&, Checks&);
};

constexpr CriterionDef kCriteria[] = {
    {1, "upper bounds", true, criterion_bounds},
    {2, "GHZ3 closed forms", true, criterion_ghz3},
    {3, "HS E_VN", true, criterion_hs},
    {4, "BSSB5 marginals and maxima", true, criterion_bssb5},
    {5, "PSI6QB marginals and maxima", true, criterion_psi6},
    {6, "REN4 E_R", true, criterion_ren4},
    {7, "VN7 measures and marginals", true, criterion_vn7},
    {8, "negativity oracle equivalence", true, criterion_negativity_oracle},
    {9, "search reproduction", false, criterion_search},
    {10, "distribution rank properties", false, criterion_distribution},
    {11, "seven-qubit marginal probe", false, criterion_seven_qubit_probe},
};

ReferenceValues load_reference(const VerifyOptions& options) {
  if (options.data_dir) {
    const auto path = *options.data_dir / "reference_values.txt";
    std::ifstream in(path);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      return ReferenceValues::parse(buf.str(), path.string());
    }
  }
  return ReferenceValues::bundled();
}

}  // namespace

std::vector<CriterionResult> run_verification(const VerifyOptions& options) {
  const Context ctx{options, load_reference(options)};
  std::vector<CriterionResult> results;
  for (const CriterionDef& def : kCriteria) {
    CriterionResult r;
    r.id = def.id;
    r.name = def.name;
    bool enabled = options.only.empty() ? (def.id != kLongCriterion || options.include_long)
                                        : options.only.count(def.id) != 0;
    if (options.quick && !def.closed_form) enabled = false;
    if (!enabled) {
      r.skipped = true;
    } else {
      const auto start = Clock::now();
      try {
        Checks checks;
        def.run(ctx, checks);
        checks.fill(r);
      } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    }
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_criterion_line(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "[%s] C%-2d %-32s", r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL"), r.id,
                r.name.c_str());
  std::string line = head;
  if (r.skipped) return line;
  char secs[32];
  std::snprintf(secs, sizeof secs, " (%.2f s)", r.seconds);
  line += secs;
  if (!r.observed.empty()) line += "\n       observed: " + r.observed;
  if (!r.expected.empty()) line += "\n       expected: " + r.expected;
  if (!r.detail.empty()) line += "\n       detail:   " + r.detail;
  return line;
}

}  // namespace qent
