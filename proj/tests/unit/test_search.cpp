#include <doctest.h>

#include <cmath>

#include "qent/error.hpp"
#include "qent/rng.hpp"
#include "qent/search.hpp"

using qent::MeasureKind;
using qent::SearchConfig;

namespace {

qent::ErrorCode config_error(const SearchConfig& c) {
  try {
    qent::validate(c);
  } catch (const qent::Error& e) {
    return e.code();
  }
  return qent::ErrorCode::Numerical;
}

}  // namespace

TEST_CASE("config validation") {
  SearchConfig c;
  CHECK_NOTHROW(qent::validate(c));
  SearchConfig bad = c;
  bad.n = 1;
  CHECK(config_error(bad) == qent::ErrorCode::InvalidConfig);
  bad = c;
  bad.delta_floor = 0;
  CHECK(config_error(bad) == qent::ErrorCode::InvalidConfig);
  bad = c;
  bad.delta_init = 1e-9;
  CHECK(config_error(bad) == qent::ErrorCode::InvalidConfig);
  bad = c;
  bad.rejection_window = 0;
  CHECK(config_error(bad) == qent::ErrorCode::InvalidConfig);
  bad = c;
  bad.initial_state = qent::InitialState::File;
  CHECK(config_error(bad) == qent::ErrorCode::InvalidConfig);
  bad.initial_file_state = qent::ghz_state(4);
  CHECK(config_error(bad) == qent::ErrorCode::InvalidConfig);
  bad = c;
  bad.move_rule = qent::MoveRule::BrownMultiplicative;
  CHECK(config_error(bad) == qent::ErrorCode::InvalidConfig);
  bad.allow_degenerate = true;
  CHECK_NOTHROW(qent::validate(bad));
  CHECK_THROWS_AS(qent::multi_restart(c, 0), qent::Error);
}

TEST_CASE("three-qubit search reaches the GHZ value") {
  SearchConfig c;
  c.n = 3;
  const auto t = qent::hill_climb(c);
  CHECK(t.final_objective() >= 2.9999);
  CHECK(t.final_objective() <= 3.0 + 1e-9);
  CHECK(t.initial_objective == 0.0);
}

TEST_CASE("trace is strictly increasing and reproducible") {
  SearchConfig c;
  c.n = 4;
  c.kind = MeasureKind::Linear;
  c.seed = 9;
  c.rejection_window = 50;
  c.delta_floor = 1e-4;
  const auto a = qent::hill_climb(c);
  const auto b = qent::hill_climb(c);
  REQUIRE(!a.accepted_steps.empty());
  for (std::size_t i = 1; i < a.accepted_steps.size(); ++i) {
    CHECK(a.accepted_steps[i].objective > a.accepted_steps[i - 1].objective);
    CHECK(a.accepted_steps[i].step > a.accepted_steps[i - 1].step);
    CHECK(a.accepted_steps[i].delta_max <= a.accepted_steps[i - 1].delta_max);
  }
  CHECK(a.final_state == b.final_state);
  CHECK(a.total_proposals == b.total_proposals);
  CHECK(a.final_objective() == doctest::Approx(a.accepted_steps.back().objective).epsilon(1e-12));
  // halving count is fixed by delta_init / delta_floor
  CHECK(a.halvings.size() == static_cast<std::size_t>(std::ceil(std::log2(c.delta_init / c.delta_floor))));
}

TEST_CASE("multi_restart is thread-count independent") {
  SearchConfig c;
  c.n = 3;
  c.kind = MeasureKind::Negativity;
  c.rejection_window = 40;
  c.delta_floor = 1e-5;
  c.initial_state = qent::InitialState::RandomHaar;
  const auto one = qent::multi_restart(c, 4, 1);
  const auto four = qent::multi_restart(c, 4, 4);
  REQUIRE(one.runs.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(one.runs[i].seed == c.seed + i);
    CHECK(one.runs[i].final_objective == four.runs[i].final_objective);
  }
  CHECK(one.best_index == four.best_index);
  CHECK(one.best.final_state == four.best.final_state);
  for (const auto& r : one.runs) CHECK(r.final_objective <= one.best.final_objective());
}

TEST_CASE("perturbations keep states normalized") {
  qent::Rng rng = qent::make_rng(1);
  const auto s = qent::haar_random_state(4, rng);
  const auto a = qent::perturb_additive(s, 0.1, rng);
  CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(a == s);
  const auto b = qent::perturb_brown(s, rng);
  CHECK(b.norm() == doctest::Approx(1.0).epsilon(1e-14));
  // the Brown move changes one coefficient before renormalizing
  int changed_ratio = 0;
  const double scale = std::abs(b[0]) / std::abs(s[0]);
  for (std::size_t k = 1; k < s.dim(); ++k)
    if (std::abs(std::abs(b[k]) / std::abs(s[k]) - scale) > 1e-9) ++changed_ratio;
  CHECK(changed_ratio <= 1);
  CHECK_THROWS_AS(qent::perturb_additive(s, 0.0, rng), qent::Error);
}

TEST_CASE("degenerate Brown run stays at the product state") {
  SearchConfig c;
  c.n = 3;
  c.move_rule = qent::MoveRule::BrownMultiplicative;
  c.allow_degenerate = true;
  c.rejection_window = 10;
  c.delta_floor = 1e-2;
  const auto t = qent::hill_climb(c);
  // rounding in the renormalization can register as a tiny "gain"
  CHECK(t.final_objective() < 1e-12);
  CHECK(std::abs(std::abs(t.final_state[0]) - 1.0) < 1e-15);
}

TEST_CASE("Brown search from a random start makes progress") {
  SearchConfig c;
  c.n = 3;
  c.move_rule = qent::MoveRule::BrownMultiplicative;
  c.initial_state = qent::InitialState::RandomHaar;
  c.rejection_window = 100;
  c.delta_floor = 1e-3;
  const auto t = qent::hill_climb(c);
  CHECK(t.final_objective() > t.initial_objective);
}

TEST_CASE("trace serialization") {
  SearchConfig c;
  c.n = 2;
  c.rejection_window = 20;
  c.delta_floor = 1e-3;
  const auto t = qent::hill_climb(c);
  const std::string csv = qent::trace_to_csv(t);
  CHECK(csv.rfind("step,delta_max,objective\n", 0) == 0);
  const std::string json = qent::trace_to_json(t);
  CHECK(json.find("\"config\"") != std::string::npos);
  const auto r = qent::multi_restart(c, 2, 1);
  CHECK(qent::restarts_to_csv(r.runs).find('\n') != std::string::npos);
}
