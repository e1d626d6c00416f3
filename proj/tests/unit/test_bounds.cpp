#include <doctest.h>

#include <cmath>
#include <random>

#include "ghgd/bounds.hpp"
#include "ghgd/moments.hpp"

using ghgd::BoundMethod;
using ghgd::Instance;
using ghgd::OverlapMode;
using ghgd::Rational;

TEST_CASE("chebyshev_p_at_least_one") {
  {
    const auto bounds = ghgd::chebyshev_p_at_least_one(Rational(4, 100), Rational(4, 100));
    CHECK(bounds.general.valid);
    CHECK(bounds.mean_form.valid);
    // 0.04 / 0.96^2
    CHECK(bounds.general.bound == doctest::Approx(0.0434027777778).epsilon(1e-10));
    CHECK(bounds.mean_form.bound == doctest::Approx(0.0434027777778).epsilon(1e-10));
    CHECK(bounds.general.method == BoundMethod::ChebyshevGeneral);
    CHECK(bounds.mean_form.method == BoundMethod::ChebyshevEq14);
  }
  {
    // at the threshold mean the bound recovers the significance level
    const auto bounds = ghgd::chebyshev_p_at_least_one(Rational(4554, 100000), Rational(4554, 100000));
    CHECK(bounds.mean_form.bound == doctest::Approx(0.05).epsilon(2e-4));
  }
  {
    // as the mean vanishes the bound collapses onto the mean itself
    const auto bounds = ghgd::chebyshev_p_at_least_one(Rational(1, 1000000), Rational(1, 1000000));
    CHECK(bounds.mean_form.bound == doctest::Approx(1e-6).epsilon(1e-4));
  }
  {
    const auto vacuous = ghgd::chebyshev_p_at_least_one(Rational(2), Rational(1, 2));
    CHECK_FALSE(vacuous.general.valid);
    CHECK_FALSE(vacuous.mean_form.valid);
    CHECK_FALSE(vacuous.general.reason.empty());
  }
  {
    // variance pushing the bound past 1 clamps rather than reporting > 1
    const auto clamped = ghgd::chebyshev_p_at_least_one(Rational(1, 2), Rational(10));
    CHECK(clamped.general.valid);
    CHECK(clamped.general.bound == 1.0);
  }
}

TEST_CASE("max_mean_for_alpha hits the published thresholds") {
  const double cheb = ghgd::max_mean_for_alpha(0.05, BoundMethod::ChebyshevEq14);
  CHECK(std::abs(cheb - 0.04554) < 5e-4);
  // substituting back recovers alpha
  CHECK(std::abs(cheb / ((1 - cheb) * (1 - cheb)) - 0.05) < 1e-9);

  const double vp = ghgd::max_mean_for_alpha(0.05, BoundMethod::VysochanskiiPetunin);
  CHECK(std::abs(vp - 0.09167) < 5e-4);
  // the defining equation at alpha = 0.05: E + 3 sqrt(E) = 1
  CHECK(std::abs(vp + 3 * std::sqrt(vp) - 1.0) < 1e-12);

  CHECK_THROWS_AS(ghgd::max_mean_for_alpha(0.0, BoundMethod::ChebyshevEq14), std::domain_error);
  CHECK_THROWS_AS(ghgd::max_mean_for_alpha(1.0, BoundMethod::ChebyshevEq14), std::domain_error);
  CHECK_THROWS_AS(ghgd::max_mean_for_alpha(0.05, BoundMethod::ExactEnumeration), std::domain_error);
}

TEST_CASE("max_mean_for_alpha is monotone in alpha") {
  double previous = 0.0;
  for (double alpha = 0.005; alpha < 0.5; alpha += 0.005) {
    const double value = ghgd::max_mean_for_alpha(alpha, BoundMethod::ChebyshevEq14);
    CHECK(value > previous);
    previous = value;
  }
}

TEST_CASE("mean_variance_gap") {
  {
    const auto gap = ghgd::mean_variance_gap(Instance(4, {2, 2}));
    CHECK(gap.expectation == 1);
    CHECK(gap.variance == Rational(1, 3));
    CHECK(gap.gap == Rational(2, 3));
    REQUIRE(gap.ratio.has_value());
    CHECK(*gap.ratio == Rational(2, 3));
  }
  {
    const auto zero = ghgd::mean_variance_gap(Instance(4, {0, 2}));
    CHECK(zero.gap == 0);
    CHECK_FALSE(zero.ratio.has_value());
  }
}

TEST_CASE("the mean dominates the variance on every nondegenerate instance") {
  std::mt19937 rng(55);
  std::uniform_int_distribution<std::int64_t> pick_n(2, 16);
  std::uniform_int_distribution<int> pick_T(2, 5);
  int checked = 0;
  while (checked < 200) {
    const std::int64_t n = pick_n(rng);
    const int T = pick_T(rng);
    std::uniform_int_distribution<std::int64_t> pick_m(1, n);
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(T));
    bool below_n = false;
    for (auto& m : sizes) {
      m = pick_m(rng);
      below_n |= m < n;
    }
    if (!below_n) continue;
    ++checked;
    const Instance inst(n, sizes);
    const auto gap = ghgd::mean_variance_gap(inst);
    CHECK(gap.variance < gap.expectation);

    // ratio identity: gap/E = prod m_i / n^(T-1) - prod (m_i - 1) / (n-1)^(T-1)
    ghgd::BigInt direct{1};
    ghgd::BigInt shifted{1};
    for (const auto m : sizes) {
      direct *= m;
      shifted *= m - 1;
    }
    const Rational identity =
        Rational(direct, ghgd::ipow(n, static_cast<std::uint64_t>(T - 1))) -
        Rational(shifted, ghgd::ipow(n - 1, static_cast<std::uint64_t>(T - 1)));
    REQUIRE(gap.ratio.has_value());
    CHECK(*gap.ratio == identity);
  }
}

TEST_CASE("overlap_significance exact paths") {
  const Instance inst(4, {2, 2});
  const auto exact = ghgd::overlap_significance(inst, 2, OverlapMode::ExactT, 2);
  CHECK(exact.method == BoundMethod::ExactEnumeration);
  REQUIRE(exact.exact_p_value.has_value());
  CHECK(*exact.exact_p_value == Rational(1, 6));

  const auto trivial = ghgd::overlap_significance(inst, 1, OverlapMode::ExactT, 0);
  REQUIRE(trivial.exact_p_value.has_value());
  CHECK(*trivial.exact_p_value == 1);

  // beyond the support the exact tail is 0
  const auto impossible = ghgd::overlap_significance(inst, 2, OverlapMode::ExactT, 3);
  REQUIRE(impossible.exact_p_value.has_value());
  CHECK(*impossible.exact_p_value == 0);

  // p-values decrease as the observed count grows
  const Instance inst3(4, {2, 2, 2});
  Rational previous{2};
  for (std::int64_t k = 0; k <= 3; ++k) {
    const auto report = ghgd::overlap_significance(inst3, 2, OverlapMode::ExactT, k);
    REQUIRE(report.exact_p_value.has_value());
    CHECK(*report.exact_p_value <= previous);
    previous = *report.exact_p_value;
  }

  CHECK_THROWS_AS(ghgd::overlap_significance(inst, 2, OverlapMode::ExactT, -1),
                  std::domain_error);
}

TEST_CASE("overlap_significance falls back to the one-sided chebyshev bound") {
  // mean 0.04: far beyond any enumeration budget at n = 2500
  const Instance inst(2500, {10, 10});
  const auto report = ghgd::overlap_significance(inst, 1, OverlapMode::ExactT, 1, 100);
  CHECK(report.method == BoundMethod::ChebyshevGeneral);
  CHECK_FALSE(report.exact_p_value.has_value());
  CHECK(report.valid);
  // E(x_1) = 2*(10*2490)/2500 = 19.92 > 1, so k = 1 does not exceed the mean
  CHECK(report.bound == 1.0);
  CHECK_FALSE(report.reason.empty());

  // the full overlap has mean 100/2500 and the bound variance/(k - mean)^2
  const auto tail = ghgd::overlap_significance(inst, 2, OverlapMode::ExactT, 1, 100);
  CHECK(tail.method == BoundMethod::ExactEnumeration);  // t = T: recursion, no enumeration

  const Instance inst3(2500, {10, 10, 10});
  const auto fallback = ghgd::overlap_significance(inst3, 2, OverlapMode::AtLeastT, 1, 100);
  CHECK(fallback.method == BoundMethod::ChebyshevGeneral);
  CHECK(fallback.valid);
  CHECK(fallback.bound > 0.0);
  CHECK(fallback.bound < 1.0);
  const double mean = ghgd::to_double(fallback.mean);
  const double variance = ghgd::to_double(fallback.variance);
  CHECK(fallback.bound == doctest::Approx(variance / ((1 - mean) * (1 - mean))));

  // observed_k = 0 needs no enumeration to be exactly 1
  const auto sure = ghgd::overlap_significance(inst3, 2, OverlapMode::ExactT, 0, 100);
  REQUIRE(sure.exact_p_value.has_value());
  CHECK(*sure.exact_p_value == 1);
}
