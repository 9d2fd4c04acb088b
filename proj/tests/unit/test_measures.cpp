#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qent/error.hpp"
#include "qent/measures.hpp"
#include "qent/reference.hpp"
#include "qent/rng.hpp"

using qent::MeasureKind;

namespace {

// Canonical-bipartition count with m qubits on the small side.
double cuts(int n, int m) { return 2 * m == n ? test::binomial(n, m) / 2 : test::binomial(n, m); }

double value_for(MeasureKind k, const std::vector<double>& spec) {
  double sq = 0, vn = 0, mx = 0, rt = 0;
  for (double l : spec) {
    sq += l * l;
    if (l > 0) vn -= l * std::log2(l);
    mx = std::max(mx, l);
    rt += std::sqrt(l);
  }
  switch (k) {
    case MeasureKind::Linear: return 1 - sq;
    case MeasureKind::VonNeumann: return vn;
    case MeasureKind::RenyiInf: return -std::log(mx);
    case MeasureKind::Negativity: return (rt * rt - 1) / 2;
  }
  return 0;
}

}  // namespace

TEST_CASE("spectrum functions") {
  const std::vector<double> half{0.5, 0.5};
  CHECK(qent::linear_entropy(half) == doctest::Approx(0.5));
  CHECK(qent::von_neumann_entropy(half) == doctest::Approx(1.0));
  CHECK(qent::renyi_inf_entropy(half) == doctest::Approx(std::numbers::ln2));
  CHECK(qent::negativity_from_spectrum(half) == doctest::Approx(0.5));
  const std::vector<double> pure{1.0, 0.0};
  for (MeasureKind k : qent::kAllMeasures) CHECK(qent::measure_from_spectrum(k, pure) == doctest::Approx(0.0));
}

TEST_CASE("GHZ: every cut has spectrum {1/2, 1/2}") {
  for (int n = 2; n <= 8; ++n) {
    const auto s = qent::ghz_state(n);
    const double count = std::ldexp(1.0, n - 1) - 1;
    for (MeasureKind k : qent::kAllMeasures)
      CHECK(qent::global_measure(s, k).total == doctest::Approx(count * value_for(k, {0.5, 0.5})).epsilon(1e-12));
  }
}

TEST_CASE("W: an m-qubit side has spectrum {m/n, 1 - m/n}") {
  for (int n = 3; n <= 8; ++n) {
    const auto s = qent::w_state(n);
    for (MeasureKind k : qent::kAllMeasures) {
      double expected = 0;
      for (int m = 1; 2 * m <= n; ++m)
        expected += cuts(n, m) * value_for(k, {double(m) / n, 1 - double(m) / n});
      CHECK(qent::global_measure(s, k).total == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("product states are unentangled") {
  qent::Rng rng = qent::make_rng(2);
  // |+>|0>|psi> built from Kronecker factors
  std::vector<qent::complex> amps(8);
  const auto one = qent::haar_random_state(1, rng);
  for (std::size_t k = 0; k < 8; ++k) amps[k] = (k & 2 ? 0.0 : 1.0) * one[k & 1];
  const auto s = qent::PureState::from_amplitudes(3, amps);
  // Negativity takes square roots of the spectrum, so eigenvalue noise of
  // 1e-17 shows up at the 1e-8 level.
  for (MeasureKind k : qent::kAllMeasures)
    CHECK(std::abs(qent::global_measure(s, k).total) < (k == MeasureKind::Negativity ? 1e-7 : 1e-12));
  CHECK(std::abs(qent::meyer_wallach_q(s)) < 1e-12);
}

TEST_CASE("measures are invariant under local unitaries") {
  qent::Rng rng = qent::make_rng(31);
  std::mt19937_64 urng(31);
  for (int n = 2; n <= 6; ++n) {
    auto s = qent::haar_random_state(n, rng);
    double before[4];
    for (int k = 0; k < 4; ++k) before[k] = qent::global_measure(s, qent::kAllMeasures[k]).total;
    for (int q = 0; q < n; ++q) {
      const auto u = test::random_unitary(2, urng);
      const qent::complex e[4] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
      s = qent::apply_single_qubit(s, q, e);
    }
    for (int k = 0; k < 4; ++k)
      CHECK(qent::global_measure(s, qent::kAllMeasures[k]).total == doctest::Approx(before[k]).epsilon(1e-10));
  }
}

TEST_CASE("upper bound: closed form and dominance") {
  for (int n = 2; n <= 10; ++n) {
    double l = 0, vn = 0, r = 0, neg = 0;
    for (int m = 1; 2 * m <= n; ++m) {
      const double d = std::ldexp(1.0, m);
      l += cuts(n, m) * (1 - 1 / d);
      vn += cuts(n, m) * m;
      r += cuts(n, m) * m * std::log(2.0);
      neg += cuts(n, m) * (d - 1) / 2;
    }
    CHECK(qent::upper_bound(MeasureKind::Linear, n) == doctest::Approx(l));
    CHECK(qent::upper_bound(MeasureKind::VonNeumann, n) == doctest::Approx(vn));
    CHECK(qent::upper_bound(MeasureKind::RenyiInf, n) == doctest::Approx(r));
    CHECK(qent::upper_bound(MeasureKind::Negativity, n) == doctest::Approx(neg));
  }
  qent::Rng rng = qent::make_rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 6;
    const auto s = qent::haar_random_state(n, rng);
    for (MeasureKind k : qent::kAllMeasures)
      CHECK(qent::global_measure(s, k).total <= qent::upper_bound(k, n) + 1e-9);
  }
}

TEST_CASE("published bounds agree with the formula") {
  const auto& ref = qent::ReferenceValues::bundled();
  for (int n = 3; n <= 7; ++n)
    for (MeasureKind k : qent::kAllMeasures) CHECK(std::abs(qent::upper_bound(k, n) - ref.bound(k, n)) <= 1e-6);
}

TEST_CASE("Schmidt negativity equals the partial-transpose oracle") {
  qent::Rng rng = qent::make_rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const auto s = qent::haar_random_state(n, rng);
    for (const auto& b : qent::enumerate_bipartitions(n))
      CHECK(std::abs(qent::negativity(s, b) - qent::negativity_oracle(s, b)) < 1e-10);
  }
}

TEST_CASE("hot path totals equal the report totals") {
  qent::Rng rng = qent::make_rng(5);
  for (int n = 2; n <= 7; ++n) {
    const auto s = qent::haar_random_state(n, rng);
    for (MeasureKind k : qent::kAllMeasures)
      CHECK(qent::global_total(s.amplitudes(), n, k) ==
            doctest::Approx(qent::global_measure(s, k).total).epsilon(1e-12));
  }
}

TEST_CASE("catalog states reach their known values") {
  const double hs = qent::global_measure(qent::catalog_state("HS"), MeasureKind::VonNeumann).total;
  CHECK(hs == doctest::Approx(5.5 + 1.5 * std::log2(6.0)).epsilon(1e-12));

  const auto bssb = qent::catalog_state("BSSB5");
  CHECK(qent::global_measure(bssb, MeasureKind::Linear).total == doctest::Approx(10).epsilon(1e-12));
  CHECK(qent::global_measure(bssb, MeasureKind::VonNeumann).total == doctest::Approx(25).epsilon(1e-12));
  CHECK(qent::global_measure(bssb, MeasureKind::Negativity).total == doctest::Approx(17.5).epsilon(1e-12));

  const double ren4 = qent::global_measure(qent::catalog_state("REN4"), MeasureKind::RenyiInf).total;
  CHECK(std::abs(ren4 - 5.99547) < 1e-4);
}

TEST_CASE("Meyer-Wallach and Scott measures") {
  CHECK(qent::meyer_wallach_q(qent::ghz_state(5)) == doctest::Approx(1.0));
  for (int n = 3; n <= 7; ++n)
    CHECK(qent::meyer_wallach_q(qent::w_state(n)) == doctest::Approx(4.0 * (n - 1) / (n * n)));
  const auto psi = qent::catalog_state("PSI6QB");
  for (int m = 1; m <= 3; ++m) CHECK(qent::scott_q_m(psi, m) == doctest::Approx(1.0));
  CHECK(qent::scott_q_m(qent::ghz_state(4), 1) == doctest::Approx(qent::meyer_wallach_q(qent::ghz_state(4))));
  CHECK(qent::scott_q_m(qent::ghz_state(4), 2) == doctest::Approx(4.0 / 3 * 0.5));
  CHECK_THROWS_AS(qent::scott_q_m(psi, 4), qent::Error);
  CHECK_THROWS_AS(qent::scott_q_m(psi, 0), qent::Error);
}

TEST_CASE("marginal mixedness report") {
  const auto psi = qent::marginal_mixedness_report(qent::catalog_state("PSI6QB"), 3);
  REQUIRE(psi.size() == 3);
  for (const auto& row : psi) {
    CHECK(row.all_maximally_mixed);
    CHECK(row.von_neumann.min == doctest::Approx(row.m));
  }
  const auto ghz = qent::marginal_mixedness_report(qent::ghz_state(4), 2);
  CHECK(ghz[0].all_maximally_mixed);
  CHECK_FALSE(ghz[1].all_maximally_mixed);
  CHECK(ghz[1].max_mixed_deviation == doctest::Approx(0.5));

  // The published seven-qubit marginal entropies are the smallest ones.
  const auto& ref = qent::ReferenceValues::bundled();
  const auto vn7 = qent::marginal_mixedness_report(qent::catalog_state("VN7"), 3);
  CHECK(vn7[0].max_mixed_deviation < 1e-6);
  CHECK(std::abs(vn7[1].von_neumann.min - ref.at("vn7_marginal.2.VON_NEUMANN")) < 1e-6);
  CHECK(std::abs(vn7[2].linear.min - ref.at("vn7_marginal.3.LINEAR")) < 1e-6);
  CHECK(std::abs(vn7[2].renyi_inf.min - ref.at("vn7_marginal.3.RENYI_INF")) < 1e-6);
}

TEST_CASE("report serialization") {
  const auto r = qent::global_measure(qent::ghz_state(3), MeasureKind::Linear);
  const std::string csv = qent::report_to_csv(r);
  CHECK(csv.rfind("subset_mask,subset_size,value\n", 0) == 0);
  CHECK(csv.find("\n1,1,0.5") != std::string::npos);
  CHECK(qent::report_to_json(r).find("\"LINEAR\"") != std::string::npos);
}

TEST_CASE("measure names") {
  CHECK(qent::parse_measure_kind("vn") == MeasureKind::VonNeumann);
  CHECK(qent::parse_measure_kind("NEG") == MeasureKind::Negativity);
  CHECK(qent::parse_measure_kind("renyi") == MeasureKind::RenyiInf);
  CHECK(qent::parse_measure_kind("l") == MeasureKind::Linear);
  CHECK_FALSE(qent::parse_measure_kind("concurrence").has_value());
}

TEST_CASE("global measures need two qubits") {
  const auto one = qent::PureState::from_amplitudes(1, {1.0, 0.0});
  CHECK_THROWS_AS(qent::global_measure(one, MeasureKind::Linear), qent::Error);
}
