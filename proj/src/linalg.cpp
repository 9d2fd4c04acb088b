#include "qent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qent/error.hpp"

namespace qent {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim == 0 || data_.size() != dim * dim)
    throw Error(ErrorCode::DimensionMismatch,
                "matrix of dim " + std::to_string(dim) + " needs " +
                    std::to_string(dim * dim) + " entries, got " +
                    std::to_string(data_.size()));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  return m;
}

complex ComplexMatrix::trace() const {
  complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = 0; k < dim_; ++k) {
      const complex a = (*this)(r, k);
      if (a == 0.0) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix difference dimension mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(complex scale) const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z *= scale;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return out;
}

namespace {

double offdiag_norm(std::span<const complex> a, std::size_t dim) {
  double s = 0.0;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (r != c) s += std::norm(a[r * dim + c]);
  return std::sqrt(s);
}

// One cyclic sweep over all (p, q) pairs. Each rotation first removes the
// phase of a_pq with a diagonal unitary, then applies a real Jacobi rotation.
void jacobi_sweep(std::span<complex> a, std::size_t dim) {
  for (std::size_t p = 0; p + 1 < dim; ++p) {
    for (std::size_t q = p + 1; q < dim; ++q) {
      const complex apq = a[p * dim + q];
      const double g = std::abs(apq);
      if (g < 1e-300) continue;
      const double app = a[p * dim + p].real();
      const double aqq = a[q * dim + q].real();
      // Column q scaled by conj(phase), row q by phase makes a_pq real.
      const complex phase = apq / g;
      const double theta = (aqq - app) / (2.0 * g);
      double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      if (theta < 0.0) t = -t;
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;

      for (std::size_t k = 0; k < dim; ++k) {
        if (k == p || k == q) continue;
        const complex akp = a[k * dim + p];
        const complex akq = a[k * dim + q] * std::conj(phase);
        const complex new_kp = c * akp - s * akq;
        const complex new_kq = s * akp + c * akq;
        a[k * dim + p] = new_kp;
        a[k * dim + q] = new_kq;
        a[p * dim + k] = std::conj(new_kp);
        a[q * dim + k] = std::conj(new_kq);
      }
      a[p * dim + p] = app - t * g;
      a[q * dim + q] = aqq + t * g;
      a[p * dim + q] = 0.0;
      a[q * dim + p] = 0.0;
    }
  }
}

struct JacobiOutcome {
  int sweeps;
  double residual;
};

JacobiOutcome run_jacobi(std::span<complex> a, std::size_t dim) {
  const double threshold = 1e-12 * static_cast<double>(dim);
  int sweeps = 0;
  double residual = offdiag_norm(a, dim);
  while (residual >= threshold && sweeps < kMaxJacobiSweeps) {
    jacobi_sweep(a, dim);
    ++sweeps;
    residual = offdiag_norm(a, dim);
  }
  return {sweeps, residual};
}

}  // namespace

void jacobi_eigenvalues_inplace(std::span<complex> a, std::size_t dim,
                                std::span<double> out_ascending) {
  if (dim == 1) {
    out_ascending[0] = a[0].real();
    return;
  }
  if (dim == 2) {
    // Closed form for the 2x2 Hermitian case.
    const double x = a[0].real(), z = a[3].real();
    const double mean = 0.5 * (x + z);
    const double half_gap = std::sqrt(0.25 * (x - z) * (x - z) + std::norm(a[1]));
    out_ascending[0] = mean - half_gap;
    out_ascending[1] = mean + half_gap;
    return;
  }
  run_jacobi(a, dim);
  for (std::size_t i = 0; i < dim; ++i) out_ascending[i] = a[i * dim + i].real();
  std::sort(out_ascending.begin(), out_ascending.begin() + static_cast<std::ptrdiff_t>(dim));
}

EigenResult hermitian_eigenvalues(const ComplexMatrix& m, bool allow_partial) {
  const std::size_t dim = m.dim();
  if (dim == 0 || dim > kMaxEigenDim)
    throw Error(ErrorCode::DimensionMismatch, "eigensolver supports 1 <= dim <= 1024, got " + std::to_string(dim));
  const double defect = m.hermitian_defect();
  if (defect > kHermitianTolerance)
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian (max asymmetry " + std::to_string(defect) + ")");

  std::vector<complex> work(m.entries().begin(), m.entries().end());
  // Symmetrize so the rotations see an exactly Hermitian matrix.
  for (std::size_t r = 0; r < dim; ++r) {
    work[r * dim + r] = work[r * dim + r].real();
    for (std::size_t c = r + 1; c < dim; ++c) {
      const complex avg = 0.5 * (work[r * dim + c] + std::conj(work[c * dim + r]));
      work[r * dim + c] = avg;
      work[c * dim + r] = std::conj(avg);
    }
  }

  const JacobiOutcome outcome = run_jacobi(work, dim);
  EigenResult result;
  result.sweeps = outcome.sweeps;
  result.offdiag_residual = outcome.residual;
  result.converged = outcome.residual < 1e-12 * static_cast<double>(dim);
  result.eigenvalues.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) result.eigenvalues[i] = work[i * dim + i].real();
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  if (!result.converged && !allow_partial)
    throw Error(ErrorCode::NoConvergence,
                "Jacobi did not converge after " + std::to_string(outcome.sweeps) +
                    " sweeps (residual " + std::to_string(outcome.residual) + ")");
  return result;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, unsigned subset_mask, int n) {
  if (n < 1 || n > 10 || rho.dim() != (std::size_t{1} << n))
    throw Error(ErrorCode::DimensionMismatch,
                "partial transpose needs a 2^n x 2^n matrix (n=" + std::to_string(n) +
                    ", dim=" + std::to_string(rho.dim()) + ")");
  const unsigned full = (1u << n) - 1u;
  if (subset_mask == 0 || (subset_mask & ~full) != 0 || subset_mask == full)
    throw Error(ErrorCode::DimensionMismatch, "partial transpose subset must be a nonempty proper subset");

  unsigned bits = 0;
  for (int q = 0; q < n; ++q)
    if (subset_mask & (1u << q)) bits |= 1u << (n - 1 - q);

  const std::size_t dim = rho.dim();
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t si = (i & ~std::size_t{bits}) | (j & bits);
      const std::size_t sj = (j & ~std::size_t{bits}) | (i & bits);
      out(i, j) = rho(si, sj);
    }
  return out;
}

void clamp_spectrum(std::span<double> eigenvalues) {
  for (double& v : eigenvalues) {
    if (v < -kClampTolerance)
      throw Error(ErrorCode::NotPositiveSemidefinite,
                  "eigenvalue " + std::to_string(v) + " below -1e-10 in a density matrix");
    if (v < 0.0) v = 0.0;
  }
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NormOutOfTolerance: return "NormOutOfTolerance";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Numerical: return "Numerical";
  }
  return "Unknown";
}

}  // namespace qent
