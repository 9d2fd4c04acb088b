#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qent/linalg.hpp"
#include "qent/state.hpp"

namespace test {

using qent::complex;

// Haar-ish random unitary by Gram-Schmidt on Gaussian columns.
inline qent::ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<std::vector<complex>> cols(dim, std::vector<complex>(dim));
  for (auto& c : cols)
    for (auto& x : c) x = {g(rng), g(rng)};
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      complex dot = 0;
      for (std::size_t i = 0; i < dim; ++i) dot += std::conj(cols[k][i]) * cols[j][i];
      for (std::size_t i = 0; i < dim; ++i) cols[j][i] -= dot * cols[k][i];
    }
    double norm = 0;
    for (auto& x : cols[j]) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (auto& x : cols[j]) x /= norm;
  }
  qent::ComplexMatrix u(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) u(i, j) = cols[j][i];
  return u;
}

inline qent::ComplexMatrix adjoint(const qent::ComplexMatrix& m) {
  qent::ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

// Partial trace by direct index bookkeeping: keep the qubits in `subset`
// (bit q = qubit q, qubit 0 the most significant basis bit).
inline qent::ComplexMatrix naive_reduced(const qent::PureState& s, unsigned subset) {
  const int n = s.qubits();
  std::vector<int> keep, drop;
  for (int q = 0; q < n; ++q) (subset >> q & 1u ? keep : drop).push_back(q);
  const std::size_t dk = std::size_t{1} << keep.size(), dd = std::size_t{1} << drop.size();
  const auto index = [&](std::size_t a, std::size_t b) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (a >> (keep.size() - 1 - i) & 1u) k |= std::size_t{1} << (n - 1 - keep[i]);
    for (std::size_t i = 0; i < drop.size(); ++i)
      if (b >> (drop.size() - 1 - i) & 1u) k |= std::size_t{1} << (n - 1 - drop[i]);
    return k;
  };
  qent::ComplexMatrix rho(dk);
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t a2 = 0; a2 < dk; ++a2) {
      complex sum = 0;
      for (std::size_t b = 0; b < dd; ++b) sum += s[index(a, b)] * std::conj(s[index(a2, b)]);
      rho(a, a2) = sum;
    }
  return rho;
}

inline double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace test
