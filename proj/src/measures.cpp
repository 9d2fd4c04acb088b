#include "qent/measures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include <json.hpp>

#include "qent/error.hpp"

namespace qent {

const char* to_string(MeasureKind kind) noexcept {
  switch (kind) {
    case MeasureKind::Linear: return "LINEAR";
    case MeasureKind::VonNeumann: return "VON_NEUMANN";
    case MeasureKind::RenyiInf: return "RENYI_INF";
    case MeasureKind::Negativity: return "NEGATIVITY";
  }
  return "?";
}

const char* short_label(MeasureKind kind) noexcept {
  switch (kind) {
    case MeasureKind::Linear: return "E_L";
    case MeasureKind::VonNeumann: return "E_VN";
    case MeasureKind::RenyiInf: return "E_R";
    case MeasureKind::Negativity: return "E_N";
  }
  return "?";
}

std::optional<MeasureKind> parse_measure_kind(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  std::replace(s.begin(), s.end(), '-', '_');
  if (s == "linear" || s == "l" || s == "e_l") return MeasureKind::Linear;
  if (s == "von_neumann" || s == "vn" || s == "e_vn") return MeasureKind::VonNeumann;
  if (s == "renyi_inf" || s == "renyi" || s == "r" || s == "e_r") return MeasureKind::RenyiInf;
  if (s == "negativity" || s == "neg" || s == "n" || s == "e_n") return MeasureKind::Negativity;
  return std::nullopt;
}

double linear_entropy(std::span<const double> spectrum) {
  double purity = 0.0;
  for (double l : spectrum) purity += l * l;
  return 1.0 - purity;
}

double von_neumann_entropy(std::span<const double> spectrum) {
  double s = 0.0;
  for (double l : spectrum)
    if (l > 0.0) s -= l * std::log2(l);
  return s;
}

double renyi_inf_entropy(std::span<const double> spectrum) {
  if (spectrum.empty()) throw Error(ErrorCode::InvalidArgument, "empty spectrum");
  return -std::log(*std::max_element(spectrum.begin(), spectrum.end()));
}

double negativity_from_spectrum(std::span<const double> spectrum) {
  double sum_sqrt = 0.0;
  for (double l : spectrum) sum_sqrt += std::sqrt(std::max(l, 0.0));
  return std::max(0.0, 0.5 * (sum_sqrt * sum_sqrt - 1.0));
}

double measure_from_spectrum(MeasureKind kind, std::span<const double> spectrum) {
  switch (kind) {
    case MeasureKind::Linear: return linear_entropy(spectrum);
    case MeasureKind::VonNeumann: return von_neumann_entropy(spectrum);
    case MeasureKind::RenyiInf: return renyi_inf_entropy(spectrum);
    case MeasureKind::Negativity: return negativity_from_spectrum(spectrum);
  }
  return 0.0;
}

double negativity(const PureState& s, const Bipartition& b) {
  return negativity_from_spectrum(schmidt_spectrum(s, b));
}

double negativity_oracle(const PureState& s, const Bipartition& b) {
  if (s.qubits() > 7) throw Error(ErrorCode::DimensionMismatch, "negativity oracle limited to n <= 7");
  if (b.n != s.qubits()) throw Error(ErrorCode::InvalidSubset, "bipartition does not match state");
  const ComplexMatrix rho = ComplexMatrix::outer(s.amplitudes());
  const ComplexMatrix pt = partial_transpose(rho, b.subset, s.qubits());
  double neg = 0.0;
  for (double ev : hermitian_eigenvalues(pt).eigenvalues)
    if (ev < 0.0) neg -= ev;
  return neg;
}

namespace {

// Eigenvalues of one marginal, clamped to [0, 1], written into `lambda`.
void marginal_spectrum(const SplitPlan& plan, std::span<const complex> amps, std::span<complex> rho,
                       std::span<double> lambda) {
  plan.marginal(amps, rho);
  jacobi_eigenvalues_inplace(rho, plan.rows(), lambda);
  clamp_spectrum(lambda);
  for (double& v : lambda) v = std::min(v, 1.0);
}

double plan_value(const SplitPlan& plan, std::span<const complex> amps, MeasureKind kind) {
  if (kind == MeasureKind::Linear) return 1.0 - plan.purity(amps);
  const std::size_t d = plan.rows();
  std::array<complex, 1024> rho_buf;
  std::array<double, 32> lambda_buf;
  const std::span<complex> rho(rho_buf.data(), d * d);
  const std::span<double> lambda(lambda_buf.data(), d);
  marginal_spectrum(plan, amps, rho, lambda);
  return measure_from_spectrum(kind, lambda);
}

void check_global(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "global measures need at least 2 qubits");
}

}  // namespace

double global_total(std::span<const complex> amps, int n, MeasureKind kind) {
  check_global(n);
  double total = 0.0;
  for (const SplitPlan& plan : canonical_plans(n)) total += plan_value(plan, amps, kind);
  return total;
}

MeasureReport global_measure(const PureState& s, MeasureKind kind) {
  const int n = s.qubits();
  check_global(n);
  MeasureReport report;
  report.kind = kind;
  const auto& plans = canonical_plans(n);
  report.per_bipartition.reserve(plans.size());
  for (const SplitPlan& plan : plans) {
    const double v = plan_value(plan, s.amplitudes(), kind);
    report.per_bipartition.emplace_back(Bipartition{n, plan.subset()}, v);
    report.total += v;
  }
  return report;
}

double meyer_wallach_q(const PureState& s) {
  const int n = s.qubits();
  if (n == 1) return 0.0;
  double purity_sum = 0.0;
  for (int q = 0; q < n; ++q) purity_sum += SplitPlan(n, 1u << q).purity(s.amplitudes());
  return 2.0 * (1.0 - purity_sum / n);
}

double scott_q_m(const PureState& s, int m) {
  const int n = s.qubits();
  if (m < 1 || 2 * m > n)
    throw Error(ErrorCode::InvalidArgument,
                "Q_m needs 1 <= m <= floor(n/2); got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  const auto subsets = subsets_of_size(n, m);
  double purity_sum = 0.0;
  for (unsigned mask : subsets) purity_sum += SplitPlan(n, mask).purity(s.amplitudes());
  const double dim = std::ldexp(1.0, m);
  return dim / (dim - 1.0) * (1.0 - purity_sum / static_cast<double>(subsets.size()));
}

namespace {

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

double upper_bound(MeasureKind kind, int n) {
  check_global(n);
  double total = 0.0;
  for (int m = 1; 2 * m <= n; ++m) {
    double count = binomial(n, m);
    if (2 * m == n) count /= 2.0;
    const double dim = std::ldexp(1.0, m);
    double v = 0.0;
    switch (kind) {
      case MeasureKind::Linear: v = 1.0 - 1.0 / dim; break;
      case MeasureKind::VonNeumann: v = m; break;
      case MeasureKind::RenyiInf: v = m * std::numbers::ln2; break;
      case MeasureKind::Negativity: v = (dim - 1.0) / 2.0; break;
    }
    total += count * v;
  }
  return total;
}

std::vector<SizeSummary> marginal_mixedness_report(const PureState& s, int m_max) {
  const int n = s.qubits();
  if (m_max < 1 || 2 * m_max > n)
    throw Error(ErrorCode::InvalidArgument,
                "mixedness report needs 1 <= m_max <= floor(n/2); got " + std::to_string(m_max));
  std::vector<SizeSummary> out;
  for (int m = 1; m <= m_max; ++m) {
    SizeSummary sum;
    sum.m = m;
    sum.linear.min = sum.von_neumann.min = sum.renyi_inf.min = INFINITY;
    sum.linear.max = sum.von_neumann.max = sum.renyi_inf.max = -INFINITY;
    const auto subsets = subsets_of_size(n, m);
    const std::size_t d = std::size_t{1} << m;
    for (unsigned mask : subsets) {
      const SplitPlan plan(n, mask);
      std::vector<complex> rho(d * d);
      plan.marginal(s.amplitudes(), rho);
      double dev = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          dev += std::norm(rho[i * d + j] - (i == j ? 1.0 / static_cast<double>(d) : 0.0));
      sum.max_mixed_deviation = std::max(sum.max_mixed_deviation, std::sqrt(dev));

      std::vector<double> lambda = hermitian_eigenvalues(ComplexMatrix(d, rho)).eigenvalues;
      clamp_spectrum(lambda);
      const auto accumulate = [](EntropyStats& st, double v) {
        st.min = std::min(st.min, v);
        st.max = std::max(st.max, v);
        st.mean += v;
      };
      accumulate(sum.linear, linear_entropy(lambda));
      accumulate(sum.von_neumann, von_neumann_entropy(lambda));
      accumulate(sum.renyi_inf, renyi_inf_entropy(lambda));
    }
    sum.subsets = subsets.size();
    const double count = static_cast<double>(subsets.size());
    sum.linear.mean /= count;
    sum.von_neumann.mean /= count;
    sum.renyi_inf.mean /= count;
    sum.all_maximally_mixed = sum.max_mixed_deviation <= kMaximallyMixedTolerance;
    out.push_back(sum);
  }
  return out;
}

std::string report_to_json(const MeasureReport& r) {
  nlohmann::json doc;
  doc["kind"] = to_string(r.kind);
  doc["total"] = r.total;
  auto& rows = doc["per_bipartition"] = nlohmann::json::array();
  for (const auto& [b, v] : r.per_bipartition)
    rows.push_back({{"subset_mask", b.subset}, {"subset_size", b.size()}, {"qubits", b.qubits()}, {"value", v}});
  return doc.dump(2);
}

std::string report_to_csv(const MeasureReport& r) {
  std::string out = "subset_mask,subset_size,value\n";
  char buf[64];
  for (const auto& [b, v] : r.per_bipartition) {
    std::snprintf(buf, sizeof buf, "%u,%d,%.17g\n", b.subset, b.size(), v);
    out += buf;
  }
  return out;
}

std::string mixedness_to_json(const std::vector<SizeSummary>& summary) {
  const auto stats = [](const EntropyStats& s) {
    return nlohmann::json{{"min", s.min}, {"max", s.max}, {"mean", s.mean}};
  };
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& s : summary)
    doc.push_back({{"m", s.m},
                   {"subsets", s.subsets},
                   {"linear", stats(s.linear)},
                   {"von_neumann", stats(s.von_neumann)},
                   {"renyi_inf", stats(s.renyi_inf)},
                   {"max_mixed_deviation", s.max_mixed_deviation},
                   {"all_maximally_mixed", s.all_maximally_mixed}});
  return doc.dump(2);
}

}  // namespace qent
