#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qent/linalg.hpp"

namespace qent {

inline constexpr int kMaxQubits = 10;

// Normalized pure state of n qubits. Basis label k has qubit 0 as its most
// significant bit: |q0 q1 ... q(n-1)> maps to sum_q q * 2^(n-1-q).
class PureState {
 public:
  // Normalizes by the Euclidean norm. Throws LengthMismatch or ZeroVector.
  static PureState from_amplitudes(int n, std::vector<complex> raw);

  int qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const complex> amplitudes() const noexcept { return amplitudes_; }
  const complex& operator[](std::size_t k) const { return amplitudes_[k]; }

  double norm() const;

  bool operator==(const PureState&) const = default;

 private:
  PureState(int n, std::vector<complex> amps) : n_(n), amplitudes_(std::move(amps)) {}

  int n_ = 0;
  std::vector<complex> amplitudes_;
};

// Bit of basis labels that carries qubit q.
constexpr std::size_t qubit_bit(int q, int n) { return std::size_t{1} << (n - 1 - q); }

std::string basis_label(std::size_t index, int n);
std::size_t basis_index(std::string_view label);

// Rescales to unit norm. A vector whose squared norm is already within 1e-15
// of one is left untouched so that normalization is idempotent.
void normalize_in_place(std::vector<complex>& v);

using Rng = std::mt19937_64;

// Independent standard-normal real and imaginary parts, then normalized:
// the unitarily invariant measure on pure states.
PureState haar_random_state(int n, Rng& rng);

// Local unitary u (2x2, row-major) applied to qubit q.
PureState apply_single_qubit(const PureState& s, int q, std::span<const complex, 4> u);

// Catalog. Names: GHZ<n>, W<n>, HS, BSSB5, PSI6QB, REN4, VN7 (case-insensitive).
PureState catalog_state(std::string_view name);
PureState ghz_state(int n);
PureState w_state(int n);
std::vector<std::string> catalog_names();

// A catalog name, or a path to a state file when the argument names an
// existing file.
PureState resolve_state(std::string_view name_or_path);

// State files. `.json` paths use the JSON form, anything else the text form.
PureState load_state(const std::filesystem::path& path);
void save_state(const PureState& s, const std::filesystem::path& path);
PureState parse_state_text(std::string_view text, const std::string& source = "<memory>");
std::string format_state_text(const PureState& s);
PureState parse_state_json(std::string_view text, const std::string& source = "<memory>");
std::string format_state_json(const PureState& s);

inline constexpr double kFileNormTolerance = 1e-6;

}  // namespace qent
