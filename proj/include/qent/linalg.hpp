#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qent {

using complex = std::complex<double>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  // |v><v|
  static ComplexMatrix outer(std::span<const complex> v);

  std::size_t dim() const noexcept { return dim_; }

  complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  std::span<const complex> entries() const noexcept { return data_; }

  complex trace() const;
  double frobenius_norm() const;
  // Largest |M_ij - conj(M_ji)|.
  double hermitian_defect() const;
  bool is_hermitian(double tol = 1e-12) const { return hermitian_defect() <= tol; }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(complex scale) const;
  bool operator==(const ComplexMatrix& rhs) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<complex> data_;
};

// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  double offdiag_residual = 0.0;
  int sweeps = 0;
  bool converged = true;
};

// Cyclic Jacobi for complex Hermitian matrices. Throws NotHermitian when the
// input is asymmetric beyond 1e-10, and NoConvergence when the off-diagonal
// norm is still above 1e-12*dim after the sweep cap (unless allow_partial, in
// which case the result is returned with converged == false).
EigenResult hermitian_eigenvalues(const ComplexMatrix& m, bool allow_partial = false);

// Same algorithm, operating in place on a caller-owned row-major buffer; no
// validation. Used on hot paths with small marginals.
void jacobi_eigenvalues_inplace(std::span<complex> a, std::size_t dim,
                                std::span<double> out_ascending);

// Transposes the tensor indices of the qubits in `subset` (bit i of the mask
// is qubit i, qubit 0 being the most significant bit of the basis label).
ComplexMatrix partial_transpose(const ComplexMatrix& rho, unsigned subset_mask, int n);

// Values in (-1e-10, 0) become 0; anything lower raises NotPositiveSemidefinite.
void clamp_spectrum(std::span<double> eigenvalues);

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kClampTolerance = 1e-10;
inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr std::size_t kMaxEigenDim = 1024;

}  // namespace qent
