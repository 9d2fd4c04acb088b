#include <doctest.h>

#include <bit>
#include <set>

#include "helpers.hpp"
#include "qent/error.hpp"
#include "qent/partition.hpp"
#include "qent/rng.hpp"

using qent::Bipartition;

TEST_CASE("canonical bipartitions: count, order, uniqueness") {
  for (int n = 2; n <= 10; ++n) {
    const auto all = qent::enumerate_bipartitions(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)) - 1);
    std::set<unsigned> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Bipartition& b = all[i];
      CHECK(b.is_canonical());
      CHECK(2 * b.size() <= n);
      if (2 * b.size() == n) CHECK((b.subset & 1u) != 0);
      // a cut and its complement are the same bipartition
      CHECK(seen.count(b.complement()) == 0);
      seen.insert(b.subset);
      if (i > 0) {
        const Bipartition& p = all[i - 1];
        CHECK((p.size() < b.size() || (p.size() == b.size() && p.subset < b.subset)));
      }
    }
  }
}

TEST_CASE("canonical_bipartition flips to the small side") {
  const Bipartition b = qent::canonical_bipartition(5, 0b11110);
  CHECK(b.subset == 0b00001);
  CHECK(qent::canonical_bipartition(4, 0b1100).subset == 0b0011);
  CHECK(qent::canonical_bipartition(4, 0b0011).subset == 0b0011);
  CHECK_THROWS_AS(qent::canonical_bipartition(4, 0), qent::Error);
  CHECK_THROWS_AS(qent::canonical_bipartition(4, 0b1111), qent::Error);
  CHECK_THROWS_AS(qent::canonical_bipartition(4, 0b10000), qent::Error);
  CHECK(b.qubits() == std::vector<int>{0});
}

TEST_CASE("subsets_of_size") {
  for (int n = 2; n <= 8; ++n)
    for (int m = 1; m < n; ++m) {
      const auto subs = qent::subsets_of_size(n, m);
      CHECK(subs.size() == static_cast<std::size_t>(test::binomial(n, m)));
      for (unsigned s : subs) CHECK(std::popcount(s) == m);
    }
}

TEST_CASE("reduced density matches the naive partial trace") {
  qent::Rng rng = qent::make_rng(17);
  for (int n = 2; n <= 6; ++n) {
    const auto s = qent::haar_random_state(n, rng);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      const auto fast = qent::reduced_density(s, mask);
      const auto slow = test::naive_reduced(s, mask);
      CHECK((fast - slow).frobenius_norm() < 1e-14);
      CHECK(fast.trace().real() == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("split plan purity equals Tr rho^2") {
  qent::Rng rng = qent::make_rng(4);
  const auto s = qent::haar_random_state(6, rng);
  for (const auto& plan : qent::canonical_plans(6)) {
    const auto rho = test::naive_reduced(s, plan.subset());
    double tr = 0;
    for (auto z : rho.entries()) tr += std::norm(z);
    CHECK(plan.purity(s.amplitudes()) == doctest::Approx(tr).epsilon(1e-13));
  }
}

TEST_CASE("Schmidt spectra of complementary sides agree") {
  qent::Rng rng = qent::make_rng(8);
  const auto s = qent::haar_random_state(5, rng);
  for (const auto& b : qent::enumerate_bipartitions(5)) {
    const auto small = qent::schmidt_spectrum(s, b);
    const auto big = qent::hermitian_eigenvalues(qent::reduced_density(s, b.complement())).eigenvalues;
    // the larger marginal has the same nonzero spectrum, padded with zeros
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(std::abs(small[i] - big[big.size() - 1 - i]) < 1e-12);
    for (std::size_t i = 0; i + small.size() < big.size(); ++i) CHECK(std::abs(big[i]) < 1e-12);
  }
}
