#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qent/linalg.hpp"
#include "qent/state.hpp"

namespace qent {

// One side of a split of n qubits. Bit q of `subset` selects qubit q.
struct Bipartition {
  int n = 0;
  unsigned subset = 0;

  int size() const noexcept;
  unsigned complement() const noexcept { return ((1u << n) - 1u) & ~subset; }
  std::vector<int> qubits() const;
  // Canonical sides: at most n/2 qubits, and a side of exactly n/2 holds qubit 0.
  bool is_canonical() const noexcept;

  bool operator==(const Bipartition&) const = default;
};

// Validates the mask and flips it to the canonical side. Throws InvalidSubset.
Bipartition canonical_bipartition(int n, unsigned subset);

// All 2^(n-1)-1 canonical bipartitions ordered by size, then mask ascending.
std::vector<Bipartition> enumerate_bipartitions(int n);

// All size-m subsets (as masks) in ascending mask order.
std::vector<unsigned> subsets_of_size(int n, int m);

// Gather table for the marginal of `subset`: the amplitude vector read as a
// 2^m x 2^(n-m) matrix A, so that rho = A A^dagger.
class SplitPlan {
 public:
  SplitPlan(int n, unsigned subset);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  unsigned subset() const noexcept { return subset_; }

  // Writes the rows() x rows() marginal into `out` (row-major).
  void marginal(std::span<const complex> amps, std::span<complex> out) const;
  // Tr rho^2 without forming an eigen decomposition.
  double purity(std::span<const complex> amps) const;

 private:
  unsigned subset_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> gather_;
};

// Plans for enumerate_bipartitions(n), built once per n and shared.
const std::vector<SplitPlan>& canonical_plans(int n);

// rho_s = Tr_complement |s><s| for any nonempty proper subset.
ComplexMatrix reduced_density(const PureState& s, unsigned subset);

// Eigenvalues of reduced_density(s, b.subset), descending, clamped to [0, 1].
std::vector<double> schmidt_spectrum(const PureState& s, const Bipartition& b);

}  // namespace qent
