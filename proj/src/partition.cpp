#include "qent/partition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <string>

#include "qent/error.hpp"

namespace qent {

int Bipartition::size() const noexcept { return std::popcount(subset); }

std::vector<int> Bipartition::qubits() const {
  std::vector<int> out;
  for (int q = 0; q < n; ++q)
    if (subset & (1u << q)) out.push_back(q);
  return out;
}

bool Bipartition::is_canonical() const noexcept {
  const int m = size();
  if (m == 0 || 2 * m > n) return false;
  return 2 * m < n || (subset & 1u) != 0;
}

namespace {

void check_subset(int n, unsigned subset) {
  if (n < 2 || n > kMaxQubits)
    throw Error(ErrorCode::InvalidSubset, "bipartitions need 2 <= n <= 10, got n=" + std::to_string(n));
  const unsigned full = (1u << n) - 1u;
  if (subset == 0 || subset == full || (subset & ~full) != 0)
    throw Error(ErrorCode::InvalidSubset,
                "subset mask " + std::to_string(subset) + " is not a nonempty proper subset of " +
                    std::to_string(n) + " qubits");
}

}  // namespace

Bipartition canonical_bipartition(int n, unsigned subset) {
  check_subset(n, subset);
  Bipartition b{n, subset};
  if (!b.is_canonical()) b.subset = b.complement();
  return b;
}

std::vector<unsigned> subsets_of_size(int n, int m) {
  std::vector<unsigned> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    if (std::popcount(mask) == m) out.push_back(mask);
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 2 || n > kMaxQubits)
    throw Error(ErrorCode::InvalidArgument, "bipartitions need 2 <= n <= 10, got n=" + std::to_string(n));
  std::vector<Bipartition> out;
  out.reserve((std::size_t{1} << (n - 1)) - 1);
  for (int m = 1; 2 * m <= n; ++m)
    for (unsigned mask : subsets_of_size(n, m)) {
      const Bipartition b{n, mask};
      if (b.is_canonical()) out.push_back(b);
    }
  return out;
}

SplitPlan::SplitPlan(int n, unsigned subset) : subset_(subset) {
  check_subset(n, subset);
  const int m = std::popcount(subset);
  rows_ = std::size_t{1} << m;
  cols_ = std::size_t{1} << (n - m);
  gather_.resize(rows_ * cols_);
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
    std::size_t r = 0, c = 0;
    for (int q = 0; q < n; ++q) {
      const std::size_t bit = (k & qubit_bit(q, n)) ? 1 : 0;
      if (subset & (1u << q))
        r = (r << 1) | bit;
      else
        c = (c << 1) | bit;
    }
    gather_[r * cols_ + c] = static_cast<std::uint32_t>(k);
  }
}

void SplitPlan::marginal(std::span<const complex> amps, std::span<complex> out) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    const std::uint32_t* gi = &gather_[i * cols_];
    for (std::size_t j = i; j < rows_; ++j) {
      const std::uint32_t* gj = &gather_[j * cols_];
      double re = 0.0, im = 0.0;
      for (std::size_t c = 0; c < cols_; ++c) {
        const complex a = amps[gi[c]], b = amps[gj[c]];
        // a * conj(b)
        re += a.real() * b.real() + a.imag() * b.imag();
        im += a.imag() * b.real() - a.real() * b.imag();
      }
      out[i * rows_ + j] = {re, im};
      out[j * rows_ + i] = {re, -im};
    }
    out[i * rows_ + i] = out[i * rows_ + i].real();
  }
}

double SplitPlan::purity(std::span<const complex> amps) const {
  std::array<complex, 64> buf{};
  std::vector<complex> heap;
  std::span<complex> rho;
  if (rows_ * rows_ <= buf.size()) {
    rho = std::span<complex>(buf.data(), rows_ * rows_);
  } else {
    heap.resize(rows_ * rows_);
    rho = heap;
  }
  marginal(amps, rho);
  double p = 0.0;
  for (const auto& z : rho) p += std::norm(z);
  return p;
}

const std::vector<SplitPlan>& canonical_plans(int n) {
  if (n < 2 || n > kMaxQubits)
    throw Error(ErrorCode::InvalidArgument, "bipartitions need 2 <= n <= 10, got n=" + std::to_string(n));
  static std::array<std::once_flag, kMaxQubits + 1> flags;
  static std::array<std::vector<SplitPlan>, kMaxQubits + 1> plans;
  std::call_once(flags[static_cast<std::size_t>(n)], [n] {
    auto& list = plans[static_cast<std::size_t>(n)];
    for (const auto& b : enumerate_bipartitions(n)) list.emplace_back(n, b.subset);
  });
  return plans[static_cast<std::size_t>(n)];
}

ComplexMatrix reduced_density(const PureState& s, unsigned subset) {
  const int n = s.qubits();
  if (n < 2) throw Error(ErrorCode::InvalidSubset, "a 1-qubit state has no proper subsets");
  const SplitPlan plan(n, subset);
  std::vector<complex> buf(plan.rows() * plan.rows());
  plan.marginal(s.amplitudes(), buf);
  return ComplexMatrix(plan.rows(), std::move(buf));
}

std::vector<double> schmidt_spectrum(const PureState& s, const Bipartition& b) {
  if (b.n != s.qubits())
    throw Error(ErrorCode::InvalidSubset, "bipartition is for " + std::to_string(b.n) + " qubits, state has " +
                                              std::to_string(s.qubits()));
  const ComplexMatrix rho = reduced_density(s, b.subset);
  std::vector<double> lambda = hermitian_eigenvalues(rho).eigenvalues;
  clamp_spectrum(lambda);
  for (double& v : lambda) v = std::min(v, 1.0);
  std::reverse(lambda.begin(), lambda.end());
  return lambda;
}

}  // namespace qent
