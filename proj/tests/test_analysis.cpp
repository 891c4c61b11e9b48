#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "medshare/analysis.hpp"

using namespace medshare;

namespace {

const ScenarioAParams kCanonicalA{
    10.0, 50.0, 20.0, 1.0, 0.1, 0.5, {UtilityFamily::power, 0.5}};

// Shipped default consortium configuration (the Fig.-2-style sweep).
ScenarioBParams sweep_default_b() {
  ScenarioBParams p;
  p.W = 10.0;
  p.L = 10.0;
  p.k = 2;
  p.breach = {BreachProbSpec::Family::compound, 0.05};
  p.scale = {ValueScaleSpec::Family::log, 0.15};
  p.utility = {UtilityFamily::power, 0.5};
  return p;
}

}  // namespace

TEST_CASE("investment_threshold arithmetic") {
  ThresholdReport r = investment_threshold(kCanonicalA);
  CHECK(r.psi_threshold_L == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(r.psi_threshold_V == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(r.psi_star == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(r.binding == ThresholdReport::Binding::both);

  ScenarioAParams p = kCanonicalA;
  p.L = 2.0;
  r = investment_threshold(p);
  CHECK(r.psi_star == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(r.binding == ThresholdReport::Binding::liability);

  p = kCanonicalA;
  p.alpha = p.gamma - 1e-12;
  r = investment_threshold(p);
  CHECK(r.psi_star <= 1e-10);
}

TEST_CASE("sweep_psi reproduces the single investment threshold") {
  std::vector<double> psis;
  for (int i = 1; i <= 12; ++i) psis.push_back(static_cast<double>(i));
  const SweepSeriesA s = sweep_psi(kCanonicalA, psis);
  REQUIRE(s.points.size() == 12);
  for (int i = 0; i < 12; ++i) {
    const int expect = psis[i] <= 8.0 ? 1 : 0;  // tie at 8 goes high
    CHECK(s.points[i].contract.investment == expect);
  }
  // regime column is a step function: once low, never high again
  bool seen_low = false;
  for (const auto& pt : s.points) {
    if (pt.contract.investment == 0) seen_low = true;
    if (seen_low) CHECK(pt.contract.investment == 0);
  }
}

TEST_CASE("sweep_psi certainty equivalents: slope -1 then constant") {
  std::vector<double> psis;
  for (int i = 1; i <= 24; ++i) psis.push_back(0.5 * i);
  const SweepSeriesA s = sweep_psi(kCanonicalA, psis);
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    const auto& prev = s.points[i - 1];
    const auto& cur = s.points[i];
    if (cur.contract.investment == 1) {
      CHECK(cur.certainty_equivalent - prev.certainty_equivalent ==
            doctest::Approx(-(cur.psi - prev.psi)).epsilon(1e-12));
    } else if (prev.contract.investment == 0) {
      // low branch ignores psi entirely: bitwise-equal points
      CHECK(cur.certainty_equivalent == prev.certainty_equivalent);
      CHECK(cur.contract.provider_value == prev.contract.provider_value);
      CHECK(cur.contract.phi == prev.contract.phi);
    }
  }
}

TEST_CASE("sweep_psi validates its axis") {
  CHECK_THROWS_AS(sweep_psi(kCanonicalA, std::vector<double>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep_psi(kCanonicalA, std::vector<double>{2.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep_psi(kCanonicalA, std::vector<double>{-1.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("participation_threshold canonical example") {
  ScenarioBParams p = sweep_default_b();
  p.W = 10.0;
  p.L = 5.0;
  p.scale = {ValueScaleSpec::Family::power, 0.5};
  const ParticipationReport r = participation_threshold(p, 16);
  // margin at k=4: (2-1)*10 - (0.18549375-0.05)*5 > 0
  CHECK(r.margins[2] == doctest::Approx(10.0 - 0.67746875).epsilon(1e-12));
  CHECK(std::find(r.participating_k.begin(), r.participating_k.end(), 4) !=
        r.participating_k.end());
}

TEST_CASE("participation_threshold with no participating k") {
  ScenarioBParams p = sweep_default_b();
  p.L = 100.0;
  p.scale = {ValueScaleSpec::Family::log, 0.01};
  p.utility = {UtilityFamily::exponential, 0.05};
  const ParticipationReport r = participation_threshold(p, 16);
  CHECK(r.participating_k.empty());
  CHECK(!r.k_star.has_value());
}

TEST_CASE("default sweep config has exactly one sign change up to 64") {
  const ScenarioBParams p = sweep_default_b();
  const ParticipationReport r = participation_threshold(p, 64);
  CHECK(r.single_crossing);
  CHECK(r.change_points.size() == 1);
  REQUIRE(r.k_star.has_value());
  CHECK(*r.k_star == 9);
  // threshold agrees with the closed-form participation decision at every k
  for (int k = 2; k <= 64; ++k) {
    ScenarioBParams q = p;
    q.k = k;
    const int s = optimal_contract_B(q).s;
    CHECK(s == (r.margins[k - 2] >= 0.0 ? 1 : 0));
  }
}

TEST_CASE("sweep_k columns match the reduced utilities") {
  ScenarioBParams p = sweep_default_b();
  p.L = 5.0;
  p.scale = {ValueScaleSpec::Family::power, 0.5};
  std::vector<int> ks{2, 3, 4, 5, 6, 7, 8, 9, 10};
  const SweepSeriesB s = sweep_k(p, ks);
  REQUIRE(s.points.size() == ks.size());
  const double h1 = s.points.front().h1;
  for (const auto& pt : s.points) {
    CHECK(pt.h1 == h1);  // H^1 does not depend on k
    ScenarioBParams q = p;
    q.k = pt.k;
    const double pk = breach_prob(q.breach, pt.k);
    const double vk = value_scale(q.scale, pt.k);
    CHECK(pt.hk ==
          doctest::Approx(eval_utility(q.utility, vk * q.W - pk * q.L))
              .epsilon(1e-12));
    CHECK(pt.participate == (pt.hk >= pt.h1 ? 1 : 0));
    CHECK(pt.participate == optimal_contract_B(q).s);
  }
}

TEST_CASE("sweep_k validates its axis") {
  const ScenarioBParams p = sweep_default_b();
  CHECK_THROWS_AS(sweep_k(p, std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_k(p, std::vector<int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_k(p, std::vector<int>{4, 3}), std::invalid_argument);
}
