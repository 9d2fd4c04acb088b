#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qent/distribution.hpp"
#include "qent/error.hpp"

using qent::MeasureKind;

TEST_CASE("sampling is independent of the thread count") {
  const auto a = qent::sample_values(3, MeasureKind::VonNeumann, 10000, 5, 1);
  const auto b = qent::sample_values(3, MeasureKind::VonNeumann, 10000, 5, 3);
  CHECK(a == b);
  const auto c = qent::sample_values(3, MeasureKind::VonNeumann, 10000, 6, 1);
  CHECK(a != c);
}

TEST_CASE("histogram bookkeeping") {
  const auto h = qent::sample_distribution(4, MeasureKind::Linear, 5000, 50, 1, 1);
  CHECK(h.bin_edges.size() == 51);
  CHECK(h.bin_edges.front() == 0.0);
  CHECK(h.bin_edges.back() == doctest::Approx(qent::upper_bound(MeasureKind::Linear, 4)));
  CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0}) == 5000);
  double mass = 0;
  for (std::size_t i = 0; i < h.density.size(); ++i) mass += h.density[i] * (h.bin_edges[i + 1] - h.bin_edges[i]);
  CHECK(mass == doctest::Approx(1.0));
  CHECK(h.sample_min <= h.median);
  CHECK(h.median <= h.sample_max);
  CHECK(h.sample_max <= qent::upper_bound(MeasureKind::Linear, 4));

  auto values = qent::sample_values(4, MeasureKind::Linear, 5000, 1, 1);
  std::sort(values.begin(), values.end());
  CHECK(h.median == doctest::Approx(0.5 * (values[2499] + values[2500])));
  CHECK(qent::fraction_below(values, h.median) == doctest::Approx(0.5));
}

TEST_CASE("GHZ3 sits at the top of the 3-qubit distribution") {
  auto values = qent::sample_values(3, MeasureKind::VonNeumann, 20000, 2, 1);
  std::sort(values.begin(), values.end());
  const auto m = qent::marker_values(3, MeasureKind::VonNeumann, {"GHZ3", "W3"});
  CHECK(m[0].value == doctest::Approx(3.0));
  CHECK(qent::fraction_below(values, m[0].value) == doctest::Approx(1.0));
  CHECK(qent::fraction_below(values, m[1].value) > 0.5);
}

TEST_CASE("invalid sampling requests") {
  CHECK_THROWS_AS(qent::sample_distribution(3, MeasureKind::Linear, 0, 10, 1), qent::Error);
  CHECK_THROWS_AS(qent::sample_distribution(3, MeasureKind::Linear, 10, 1, 1), qent::Error);
  CHECK_THROWS_AS(qent::sample_distribution(8, MeasureKind::Linear, 10, 10, 1), qent::Error);
  try {
    qent::marker_values(4, MeasureKind::Linear, {"GHZ3"});
    FAIL("no throw");
  } catch (const qent::Error& e) {
    CHECK(e.code() == qent::ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("output formats") {
  const auto h = qent::sample_distribution(2, MeasureKind::Negativity, 100, 4, 1, 1);
  const std::string csv = qent::histogram_to_csv(h);
  CHECK(csv.rfind("bin_left,bin_right,count,density\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  const auto markers = qent::marker_values(2, MeasureKind::Negativity, {"GHZ2"});
  CHECK(markers[0].value == doctest::Approx(0.5));
  CHECK(qent::markers_to_csv(markers).rfind("name,value\nGHZ2,0.49999999", 0) == 0);
  CHECK(qent::gnuplot_script(h, "h.csv", markers).find("'h.csv'") != std::string::npos);
  CHECK(qent::histogram_to_json(h).find("\"median\"") != std::string::npos);
}

TEST_CASE("REN4 beats HS on the Renyi measure") {
  const auto m = qent::marker_values(4, MeasureKind::RenyiInf, {"HS", "REN4"});
  CHECK(m[1].value > m[0].value);
}
