#include "qent/state.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "embedded_data.hpp"
#include "qent/error.hpp"

namespace qent {

namespace {

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits)
    throw Error(ErrorCode::InvalidArity,
                "qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " + std::to_string(n));
}

double squared_norm(std::span<const complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
  return out;
}

}  // namespace

void normalize_in_place(std::vector<complex>& v) {
  const double sq = squared_norm(v);
  if (!(sq > 0.0) || !std::isfinite(sq)) throw Error(ErrorCode::ZeroVector, "cannot normalize a zero vector");
  if (std::abs(sq - 1.0) <= 1e-15) return;
  const double inv = 1.0 / std::sqrt(sq);
  for (auto& z : v) z *= inv;
}

PureState PureState::from_amplitudes(int n, std::vector<complex> raw) {
  check_qubits(n);
  const std::size_t expected = std::size_t{1} << n;
  if (raw.size() != expected)
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(expected) + " amplitudes for " +
                                               std::to_string(n) + " qubits, got " + std::to_string(raw.size()));
  normalize_in_place(raw);
  return PureState(n, std::move(raw));
}

double PureState::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

std::string basis_label(std::size_t index, int n) {
  std::string label(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q)
    if (index & qubit_bit(q, n)) label[static_cast<std::size_t>(q)] = '1';
  return label;
}

std::size_t basis_index(std::string_view label) {
  if (label.empty() || label.size() > static_cast<std::size_t>(kMaxQubits))
    throw Error(ErrorCode::InvalidArgument, "basis label length out of range");
  std::size_t index = 0;
  for (char c : label) {
    if (c != '0' && c != '1') throw Error(ErrorCode::InvalidArgument, "basis label must contain only 0 and 1");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return index;
}

PureState haar_random_state(int n, Rng& rng) {
  check_qubits(n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<complex> amps(std::size_t{1} << n);
  for (auto& z : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = {re, im};
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

PureState apply_single_qubit(const PureState& s, int q, std::span<const complex, 4> u) {
  const int n = s.qubits();
  if (q < 0 || q >= n) throw Error(ErrorCode::InvalidArgument, "qubit index out of range");
  const std::size_t bit = qubit_bit(q, n);
  std::vector<complex> out(s.amplitudes().begin(), s.amplitudes().end());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (k & bit) continue;
    const complex a0 = s[k], a1 = s[k | bit];
    out[k] = u[0] * a0 + u[1] * a1;
    out[k | bit] = u[2] * a0 + u[3] * a1;
  }
  return PureState::from_amplitudes(n, std::move(out));
}

PureState ghz_state(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArity, "GHZ needs at least 2 qubits");
  check_qubits(n);
  std::vector<complex> amps(std::size_t{1} << n);
  amps.front() = 1.0;
  amps.back() = 1.0;
  return PureState::from_amplitudes(n, std::move(amps));
}

PureState w_state(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArity, "W needs at least 3 qubits");
  check_qubits(n);
  std::vector<complex> amps(std::size_t{1} << n);
  for (int q = 0; q < n; ++q) amps[qubit_bit(q, n)] = 1.0;
  return PureState::from_amplitudes(n, std::move(amps));
}

namespace {

PureState from_labels(int n, std::initializer_list<std::pair<const char*, complex>> terms) {
  std::vector<complex> amps(std::size_t{1} << n);
  for (const auto& [label, c] : terms) amps[basis_index(label)] += c;
  return PureState::from_amplitudes(n, std::move(amps));
}

PureState higuchi_sudbery() {
  const complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const complex omega2 = omega * omega;
  return from_labels(4, {{"1100", 1.0}, {"0011", 1.0}, {"1001", omega}, {"0110", omega},
                         {"1010", omega2}, {"0101", omega2}});
}

// 1/2 [ |001>Phi- + |010>Psi- + |100>Phi+ + |111>Psi+ ] with normalized Bell
// pairs Psi± = (|00> ± |11>)/√2, Phi± = (|01> ± |10>)/√2.
PureState bssb5() {
  const double h = 0.5 * std::numbers::sqrt2 / 2.0;
  return from_labels(5, {{"00101", h}, {"00110", -h},
                         {"01000", h}, {"01011", -h},
                         {"10001", h}, {"10010", h},
                         {"11100", h}, {"11111", h}});
}

PureState psi6qb() {
  static constexpr const char* kPositive[] = {
      "000000", "111111", "000011", "111100", "000101", "111010", "000110",
      "111001", "001001", "110110", "001111", "110000", "010001", "101110",
      "010010", "101101", "011000", "100111", "011101", "100010"};
  static constexpr const char* kNegative[] = {
      "001010", "110101", "001100", "110011", "010100", "101011",
      "010111", "101000", "011011", "100100", "011110", "100001"};
  std::vector<complex> amps(64);
  for (const char* label : kPositive) amps[basis_index(label)] += 1.0;
  for (const char* label : kNegative) amps[basis_index(label)] -= 1.0;
  return PureState::from_amplitudes(6, std::move(amps));
}

PureState bundled(std::string_view file) {
  const std::string_view text = detail::embedded_file(file);
  if (text.empty()) throw Error(ErrorCode::Io, "bundled state file missing: " + std::string(file));
  return parse_state_text(text, std::string(file));
}

// Splits e.g. "GHZ12" into ("GHZ", 12); arity -1 when there is no suffix.
std::pair<std::string, int> split_arity(const std::string& name) {
  std::size_t pos = name.size();
  while (pos > 0 && std::isdigit(static_cast<unsigned char>(name[pos - 1]))) --pos;
  if (pos == name.size() || pos == 0) return {name, -1};
  if (name.size() - pos > 3) return {name.substr(0, pos), kMaxQubits + 1};
  return {name.substr(0, pos), std::stoi(name.substr(pos))};
}

}  // namespace

PureState catalog_state(std::string_view raw_name) {
  const std::string name = upper(raw_name);
  if (name == "HS") return higuchi_sudbery();
  if (name == "BSSB5") return bssb5();
  if (name == "PSI6QB") return psi6qb();
  if (name == "REN4") return bundled("ren4.state");
  if (name == "VN7") return bundled("vn7.state");

  auto [base, arity] = split_arity(name);
  if (base == "GHZ" || base == "W") {
    if (arity < 0) throw Error(ErrorCode::InvalidArity, "catalog state " + base + " needs a qubit count, e.g. " + base + "3");
    if (arity > kMaxQubits) throw Error(ErrorCode::InvalidArity, "qubit count too large for " + base);
    return base == "GHZ" ? ghz_state(arity) : w_state(arity);
  }
  throw Error(ErrorCode::UnknownName, "unknown catalog state '" + std::string(raw_name) + "'");
}

PureState resolve_state(std::string_view name_or_path) {
  const std::filesystem::path path{std::string(name_or_path)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) return load_state(path);
  return catalog_state(name_or_path);
}

std::vector<std::string> catalog_names() {
  return {"GHZ<n>", "W<n>", "HS", "BSSB5", "PSI6QB", "REN4", "VN7"};
}

// ---------------------------------------------------------------------------
// File formats

namespace {

struct RawRecord {
  int n = 0;
  std::vector<complex> amps;
};

PureState finish_record(RawRecord rec, const std::string& source) {
  const double norm = std::sqrt(squared_norm(rec.amps));
  if (std::abs(norm - 1.0) > kFileNormTolerance)
    throw Error(ErrorCode::NormOutOfTolerance,
                source + ": raw norm " + std::to_string(norm) + " deviates from 1 by more than 1e-6");
  return PureState::from_amplitudes(rec.n, std::move(rec.amps));
}

void put_entry(RawRecord& rec, std::set<long long>& seen, long long index, double re, double im,
               const std::string& source, int line) {
  if (index < 0 || static_cast<std::size_t>(index) >= rec.amps.size())
    throw ParseError(source, line, "index " + std::to_string(index) + " outside [0, " +
                                       std::to_string(rec.amps.size()) + ")");
  if (!seen.insert(index).second) throw ParseError(source, line, "duplicate index " + std::to_string(index));
  if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError(source, line, "non-finite amplitude");
  rec.amps[static_cast<std::size_t>(index)] = {re, im};
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PureState parse_state_text(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  RawRecord rec;
  std::set<long long> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);

    if (!have_header) {
      std::string token;
      bool have_n = false;
      while (fields >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw ParseError(source, line_no, "expected key=value in header, got '" + token + "'");
        const std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        if (key == "qubits") {
          try {
            std::size_t used = 0;
            rec.n = std::stoi(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
          } catch (const std::exception&) {
            throw ParseError(source, line_no, "bad qubit count '" + value + "'");
          }
          if (rec.n < 1 || rec.n > kMaxQubits) throw ParseError(source, line_no, "qubit count out of range");
          have_n = true;
        } else if (key == "ordering") {
          if (value != "msb-first") throw ParseError(source, line_no, "unsupported ordering '" + value + "'");
        } else {
          throw ParseError(source, line_no, "unknown header key '" + key + "'");
        }
      }
      if (!have_n) throw ParseError(source, line_no, "header must declare qubits=<n>");
      rec.amps.assign(std::size_t{1} << rec.n, 0.0);
      have_header = true;
      continue;
    }

    long long index = 0;
    std::string re_s, im_s, extra;
    if (!(fields >> index >> re_s >> im_s) || (fields >> extra))
      throw ParseError(source, line_no, "expected '<index> <re> <im>'");
    double re = 0.0, im = 0.0;
    try {
      std::size_t u1 = 0, u2 = 0;
      re = std::stod(re_s, &u1);
      im = std::stod(im_s, &u2);
      if (u1 != re_s.size() || u2 != im_s.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(source, line_no, "malformed real number");
    }
    put_entry(rec, seen, index, re, im, source, line_no);
  }
  if (!have_header) throw ParseError(source, line_no, "missing header line");
  return finish_record(std::move(rec), source);
}

std::string format_state_text(const PureState& s) {
  std::string out = "qubits=" + std::to_string(s.qubits()) + " ordering=msb-first\n";
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (s[k] == complex{0.0, 0.0}) continue;
    out += std::to_string(k) + " " + format_real(s[k].real()) + " " + format_real(s[k].imag()) + "\n";
  }
  return out;
}

PureState parse_state_json(std::string_view text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // The JSON parser reports byte offsets; convert to a line number.
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    throw ParseError(source, line, e.what());
  }
  RawRecord rec;
  std::set<long long> seen;
  try {
    rec.n = doc.at("n").get<int>();
    if (rec.n < 1 || rec.n > kMaxQubits) throw ParseError(source, 1, "qubit count out of range");
    rec.amps.assign(std::size_t{1} << rec.n, 0.0);
    for (const auto& e : doc.at("entries"))
      put_entry(rec, seen, e.at("k").get<long long>(), e.at("re").get<double>(), e.at("im").get<double>(), source, 1);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, 1, e.what());
  }
  return finish_record(std::move(rec), source);
}

std::string format_state_json(const PureState& s) {
  nlohmann::json doc;
  doc["n"] = s.qubits();
  doc["ordering"] = "msb-first";
  auto& entries = doc["entries"] = nlohmann::json::array();
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (s[k] == complex{0.0, 0.0}) continue;
    entries.push_back({{"k", k}, {"re", s[k].real()}, {"im", s[k].imag()}});
  }
  return doc.dump(2) + "\n";
}

namespace {

bool is_json_path(const std::filesystem::path& p) { return upper(p.extension().string()) == ".JSON"; }

}  // namespace

PureState load_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return is_json_path(path) ? parse_state_json(buf.str(), path.string()) : parse_state_text(buf.str(), path.string());
}

void save_state(const PureState& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write state file " + path.string());
  out << (is_json_path(path) ? format_state_json(s) : format_state_text(s));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace qent
