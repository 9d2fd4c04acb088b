// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "qent/qent.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qent_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("state round trip through the C interface") {
  const double amps[] = {1, 0, 0, 0, 0, 0, 0, 1};  // |00> + i|11>, unnormalized
  qent_state* s = nullptr;
  REQUIRE(qent_state_from_amplitudes(2, amps, 8, &s) == QENT_OK);
  CHECK(qent_state_qubits(s) == 2);
  CHECK(qent_state_dim(s) == 4);
  std::vector<double> back(8);
  REQUIRE(qent_state_amplitudes(s, back.data(), back.size()) == QENT_OK);
  CHECK(back[0] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(back[7] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(qent_state_amplitudes(s, back.data(), 4) == QENT_ERR_LENGTH_MISMATCH);

  qent_report* r = nullptr;
  REQUIRE(qent_global_measure(s, QENT_VON_NEUMANN, &r) == QENT_OK);
  CHECK(qent_report_total(r) == doctest::Approx(1.0));
  REQUIRE(qent_report_count(r) == 1);
  unsigned mask = 0;
  int size = 0;
  double v = 0;
  REQUIRE(qent_report_entry(r, 0, &mask, &size, &v) == QENT_OK);
  CHECK(mask == 1u);
  CHECK(size == 1);
  CHECK(qent_report_entry(r, 1, &mask, &size, &v) == QENT_ERR_INVALID_ARGUMENT);
  char* csv = nullptr;
  REQUIRE(qent_report_to_csv(r, &csv) == QENT_OK);
  CHECK(take(csv).rfind("subset_mask,subset_size,value", 0) == 0);
  qent_report_free(r);
  qent_state_free(s);
}

TEST_CASE("errors map to status codes with messages") {
  qent_state* s = nullptr;
  CHECK(qent_state_catalog("NOPE", &s) == QENT_ERR_UNKNOWN_NAME);
  CHECK(std::string(qent_last_error()).find("NOPE") != std::string::npos);
  CHECK(qent_state_catalog("GHZ1", &s) == QENT_ERR_INVALID_ARITY);
  CHECK(qent_state_load("/nonexistent/x.state", &s) == QENT_ERR_IO);
  const double zero[] = {0, 0, 0, 0};
  CHECK(qent_state_from_amplitudes(1, zero, 4, &s) == QENT_ERR_ZERO_VECTOR);
  CHECK(qent_state_from_amplitudes(2, zero, 4, &s) == QENT_ERR_LENGTH_MISMATCH);
  CHECK(qent_state_catalog(nullptr, &s) == QENT_ERR_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::string(qent_status_name(QENT_ERR_PARSE)) == "ParseError");
  qent_measure k;
  CHECK(qent_parse_measure("vn", &k) == QENT_OK);
  CHECK(k == QENT_VON_NEUMANN);
  CHECK(qent_parse_measure("xyz", &k) == QENT_ERR_UNKNOWN_NAME);
}

TEST_CASE("bounds and catalog values") {
  double v = 0;
  REQUIRE(qent_upper_bound(QENT_RENYI_INF, 6, &v) == QENT_OK);
  CHECK(v == doctest::Approx(45.7477139));
  REQUIRE(qent_reference_bound(QENT_NEGATIVITY, 7, &v) == QENT_OK);
  CHECK(v == 157.5);
  qent_state* psi = nullptr;
  REQUIRE(qent_state_catalog("PSI6QB", &psi) == QENT_OK);
  REQUIRE(qent_scott_q(psi, 3, &v) == QENT_OK);
  CHECK(v == doctest::Approx(1.0));
  CHECK(qent_scott_q(psi, 4, &v) == QENT_ERR_INVALID_ARGUMENT);
  char* json = nullptr;
  REQUIRE(qent_mixedness_json(psi, 3, &json) == QENT_OK);
  CHECK(take(json).find("\"all_maximally_mixed\": true") != std::string::npos);
  qent_state_free(psi);
}

TEST_CASE("search and sampling") {
  qent_search_config c;
  qent_search_config_default(&c);
  CHECK(c.n == 3);
  CHECK(c.rejection_window == 500);
  qent_search_result* r = nullptr;
  REQUIRE(qent_search_run(&c, 2, 1, &r) == QENT_OK);
  CHECK(qent_search_best_objective(r) >= 2.9999);
  CHECK(qent_search_restart_count(r) == 2);
  double all4[4];
  std::uint64_t seed = 0;
  REQUIRE(qent_search_restart(r, 1, &seed, nullptr, all4) == QENT_OK);
  CHECK(seed == 2);
  qent_state* best = nullptr;
  REQUIRE(qent_search_best_state(r, &best) == QENT_OK);
  CHECK(qent_state_qubits(best) == 3);
  qent_state_free(best);
  qent_search_result_free(r);

  c.move_rule = QENT_MOVE_BROWN;
  CHECK(qent_search_run(&c, 1, 1, &r) == QENT_ERR_INVALID_CONFIG);
  c.move_rule = static_cast<qent_move_rule>(7);
  CHECK(qent_search_run(&c, 1, 1, &r) == QENT_ERR_INVALID_CONFIG);

  qent_histogram* h = nullptr;
  REQUIRE(qent_sample(3, QENT_LINEAR, 2000, 20, 1, 1, &h) == QENT_OK);
  CHECK(qent_histogram_median(h) > 0.0);
  char* markers = nullptr;
  REQUIRE(qent_markers_csv(3, QENT_LINEAR, "GHZ3\nW3\n", &markers) == QENT_OK);
  const std::string text = take(markers);
  CHECK(text.rfind("name,value\nGHZ3,", 0) == 0);
  CHECK(text.find("\nW3,") != std::string::npos);
  CHECK(std::stod(text.substr(text.rfind(',') + 1)) == doctest::Approx(4.0 / 3));
  CHECK(qent_markers_csv(4, QENT_LINEAR, "GHZ3", &markers) == QENT_ERR_DIMENSION_MISMATCH);
  qent_histogram_free(h);
  CHECK(qent_sample(3, QENT_LINEAR, 0, 20, 1, 1, &h) == QENT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification subset") {
  qent_verify_options o;
  qent_verify_options_default(&o);
  const int only[] = {1, 2};
  o.only = only;
  o.only_count = 2;
  qent_verify_result* r = nullptr;
  REQUIRE(qent_verify(&o, &r) == QENT_OK);
  REQUIRE(qent_verify_count(r) == 11);
  int id, passed, skipped;
  REQUIRE(qent_verify_entry(r, 0, &id, &passed, &skipped) == QENT_OK);
  CHECK(id == 1);
  CHECK(passed == 1);
  REQUIRE(qent_verify_entry(r, 5, &id, &passed, &skipped) == QENT_OK);
  CHECK(skipped == 1);
  qent_verify_result_free(r);
  const int bad[] = {12};
  o.only = bad;
  o.only_count = 1;
  CHECK(qent_verify(&o, &r) == QENT_ERR_INVALID_ARGUMENT);
}
