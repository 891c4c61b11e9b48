#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "medshare/closed_form.hpp"

using namespace medshare;

namespace {

const ScenarioAParams kCanonicalA{
    10.0, 50.0, 20.0, 1.0, 0.1, 0.5, {UtilityFamily::power, 0.5}};

ScenarioBParams canonical_b() {
  ScenarioBParams p;
  p.W = 10.0;
  p.L = 5.0;
  p.k = 4;
  p.breach = {BreachProbSpec::Family::compound, 0.05};
  p.scale = {ValueScaleSpec::Family::power, 0.5};
  p.utility = {UtilityFamily::power, 0.5};
  return p;
}

// Independent 1-D maximizer for cross-checking the full-insurance payout.
double golden_section_argmax(const std::function<double(double)>& f, double lo,
                             double hi, double tol = 1e-9) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2.0;
}

ScenarioAParams random_params_a(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  ScenarioAParams p;
  p.V = std::exp(std::log(1.0) + unif(rng) * std::log(100.0));
  p.L = std::exp(std::log(1.0) + unif(rng) * std::log(100.0));
  p.W = 250.0;
  p.alpha = 0.05 + 0.4 * unif(rng);
  p.gamma = p.alpha + 0.1 + (0.94 - p.alpha - 0.1) * unif(rng);
  const double psi_star =
      std::min((p.gamma - p.alpha) * p.L, (p.gamma - p.alpha) * p.V / p.gamma);
  p.psi = psi_star * std::exp(std::log(0.25) + unif(rng) * std::log(16.0));
  switch (static_cast<int>(unif(rng) * 3)) {
    case 0:
      p.utility = {UtilityFamily::power, 0.5};
      break;
    case 1:
      p.utility = {UtilityFamily::exponential, 0.002 + 0.018 * unif(rng)};
      break;
    default:
      p.utility = {UtilityFamily::log_shifted, 1.0 + 9.0 * unif(rng)};
      break;
  }
  return p;
}

}  // namespace

TEST_CASE("optimal_insurance_A is L - t") {
  CHECK(optimal_insurance_A(kCanonicalA, 20.0) == 0.0);
  CHECK(optimal_insurance_A(kCanonicalA, 0.0) == 20.0);
  CHECK(optimal_insurance_A(kCanonicalA, 2.5) == 17.5);
  CHECK_THROWS_AS(optimal_insurance_A(kCanonicalA, 25.0), std::invalid_argument);
}

TEST_CASE("optimal_insurance_A agrees with a golden-section maximizer") {
  const ScenarioAParams& p = kCanonicalA;
  for (double t : {0.0, 2.5, 7.0, 19.0}) {
    for (int i : {0, 1}) {
      const double phi = 3.0;
      auto objective = [&](double lc) {
        return provider_utility_A(p, phi, t, lc, i);
      };
      const double lc_star = golden_section_argmax(objective, 0.0, p.L);
      // the peak is quadratic-flat, so compare on values and loosely on argmax
      CHECK(std::abs(objective(lc_star) - objective(p.L - t)) <= 1e-6);
      CHECK(std::abs(lc_star - (p.L - t)) <= 1e-3 * p.L);
    }
  }
}

TEST_CASE("lp_branch_low always binds participation at (V, 0)") {
  auto [phi, t] = lp_branch_low(kCanonicalA);
  CHECK(phi == 10.0);
  CHECK(t == 0.0);

  ScenarioAParams degenerate = kCanonicalA;
  degenerate.V = 0.0;
  auto [phi0, t0] = lp_branch_low(degenerate);
  CHECK(phi0 == 0.0);
  CHECK(t0 == 0.0);
  CHECK(phi + kCanonicalA.gamma * t == kCanonicalA.V);
}

TEST_CASE("lp_branch_high vertex and infeasibility") {
  auto high = lp_branch_high(kCanonicalA);
  REQUIRE(high.has_value());
  CHECK(high->first == doctest::Approx(8.75).epsilon(1e-15));
  CHECK(high->second == doctest::Approx(2.5).epsilon(1e-15));

  ScenarioAParams costly = kCanonicalA;
  costly.psi = 10.0;  // (gamma-alpha)V/gamma = 8 < 10
  CHECK(!lp_branch_high(costly).has_value());

  // psi = (gamma-alpha)L exactly, with the V threshold slack: t = L
  ScenarioAParams boundary = kCanonicalA;
  boundary.V = 100.0;
  boundary.psi = (boundary.gamma - boundary.alpha) * boundary.L;
  auto at_boundary = lp_branch_high(boundary);
  REQUIRE(at_boundary.has_value());
  CHECK(at_boundary->second == doctest::Approx(boundary.L).epsilon(1e-15));
}

TEST_CASE("optimal_contract_A canonical high branch") {
  const ContractA c = optimal_contract_A(kCanonicalA);
  CHECK(c.phi == doctest::Approx(8.75).epsilon(1e-15));
  CHECK(c.t == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(c.L_c == doctest::Approx(17.5).epsilon(1e-15));
  CHECK(c.investment == 1);
  CHECK(c.provider_value == doctest::Approx(std::sqrt(57.0)).epsilon(1e-12));
}

TEST_CASE("optimal_contract_A low branch when psi exceeds a threshold") {
  ScenarioAParams p = kCanonicalA;
  p.psi = 9.0;  // > (gamma-alpha)L = 8
  const ContractA c = optimal_contract_A(p);
  CHECK(c.phi == 10.0);
  CHECK(c.t == 0.0);
  CHECK(c.L_c == 20.0);
  CHECK(c.investment == 0);
  CHECK(c.provider_value == doctest::Approx(std::sqrt(50.0)).epsilon(1e-12));
}

TEST_CASE("optimal_contract_A: useless investment forces the low branch") {
  ScenarioAParams p = kCanonicalA;
  p.alpha = p.gamma - 1e-9;
  const ContractA c = optimal_contract_A(p);
  CHECK(c.phi == p.V);
  CHECK(c.t == 0.0);
  CHECK(c.L_c == p.L);
  CHECK(c.investment == 0);
}

TEST_CASE("zero-profit extraction and full insurance across random draws") {
  std::mt19937_64 rng(101);
  for (int draw = 0; draw < 100; ++draw) {
    const ScenarioAParams p = random_params_a(rng);
    const ContractA c = optimal_contract_A(p);
    CHECK(std::abs(firm_profit(p, c.phi, c.t, c.investment)) <= 1e-12);
    const double wb = wealth_A_breach(p, c.phi, c.t, c.L_c, c.investment);
    const double wn = wealth_A_no_breach(p, c.phi, c.t, c.L_c, c.investment);
    CHECK(std::abs(wb - wn) <= 1e-12);
    CHECK(c.investment == firm_best_response(p, c.phi, c.t));

    // certainty-equivalent wealth per branch
    const double ce_expect = c.investment == 1
                                 ? p.W + p.V - p.psi - p.alpha * p.L
                                 : p.W + p.V - p.gamma * p.L;
    CHECK(wn == doctest::Approx(ce_expect).epsilon(1e-12));
  }
}

TEST_CASE("branch continuity at the liability threshold") {
  ScenarioAParams p = kCanonicalA;
  p.V = 100.0;  // make the L threshold the binding one
  const double psi_star = (p.gamma - p.alpha) * p.L;
  p.psi = psi_star;
  const ContractA at = optimal_contract_A(p);
  CHECK(at.investment == 1);  // tie goes to the high branch
  const double ce_high =
      wealth_A_no_breach(p, at.phi, at.t, at.L_c, at.investment);
  p.psi = psi_star * (1.0 + 1e-12);
  const ContractA above = optimal_contract_A(p);
  CHECK(above.investment == 0);
  const double ce_low =
      wealth_A_no_breach(p, above.phi, above.t, above.L_c, above.investment);
  // both branches give W + V - gamma*L at the threshold
  CHECK(ce_high == doctest::Approx(p.W + p.V - p.gamma * p.L).epsilon(1e-12));
  CHECK(ce_low == doctest::Approx(p.W + p.V - p.gamma * p.L).epsilon(1e-12));
}

TEST_CASE("optimal_contract_B canonical participation") {
  const ScenarioBParams p = canonical_b();
  const ContractB c = optimal_contract_B(p);
  CHECK(c.s == 1);
  CHECK(c.t == 0.0);
  CHECK(c.L_c == 5.0);
  CHECK(c.provider_value ==
        doctest::Approx(std::sqrt(19.07253125)).epsilon(1e-12));
}

TEST_CASE("optimal_contract_B declines a bad consortium") {
  ScenarioBParams p = canonical_b();
  p.L = 100.0;
  p.k = 2;
  p.scale = {ValueScaleSpec::Family::log, 0.01};
  p.utility = {UtilityFamily::exponential, 0.05};  // W - p(1)L < 0 wealth
  const ContractB c = optimal_contract_B(p);
  CHECK(c.s == 0);
  CHECK(c.t == 0.0);
  CHECK(c.L_c == 100.0);
}

TEST_CASE("optimal_contract_B never fines and always fully insures") {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int draw = 0; draw < 100; ++draw) {
    ScenarioBParams p = canonical_b();
    p.W = 1.0 + 30.0 * unif(rng);
    p.L = 0.5 + 50.0 * unif(rng);
    p.k = 2 + static_cast<int>(unif(rng) * 31);
    p.breach.p1 = 0.01 + 0.09 * unif(rng);
    p.utility = {UtilityFamily::exponential, 0.01 + 0.1 * unif(rng)};
    const ContractB c = optimal_contract_B(p);
    CHECK(c.t == 0.0);
    CHECK(c.L_c == p.L);
    // full insurance: the certain wealths of the two regimes
    const double p1 = breach_prob(p.breach, 1);
    const double pk = breach_prob(p.breach, p.k);
    const double vk = value_scale(p.scale, p.k);
    const double ce = c.s == 1 ? vk * p.W - pk * p.L : p.W - p1 * p.L;
    CHECK(c.provider_value ==
          doctest::Approx(eval_utility(p.utility, ce)).epsilon(1e-12));
  }
}

TEST_CASE("participation margin is monotone decreasing in liability") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int draw = 0; draw < 50; ++draw) {
    ScenarioBParams p = canonical_b();
    p.utility = {UtilityFamily::exponential, 0.05};
    p.W = 1.0 + 20.0 * unif(rng);
    p.L = 1.0 + 40.0 * unif(rng);
    p.k = 2 + static_cast<int>(unif(rng) * 15);
    if (optimal_contract_B(p).s == 1) {
      ScenarioBParams q = p;
      q.L = p.L * unif(rng);
      if (q.L <= 0.0) continue;
      CHECK(optimal_contract_B(q).s == 1);
      CHECK(participation_margin(q) >= participation_margin(p));
    }
  }
}

TEST_CASE("degenerate indifference resolves to participation") {
  // margin exactly zero: (v(k)-1)W = (p(k)-p(1))L
  ScenarioBParams p = canonical_b();
  p.utility = {UtilityFamily::exponential, 0.1};
  const double vk = value_scale(p.scale, p.k);
  const double pk = breach_prob(p.breach, p.k);
  const double p1 = breach_prob(p.breach, 1);
  p.L = (vk - 1.0) * p.W / (pk - p1);
  const double m = participation_margin(p);
  if (m == 0.0) {
    CHECK(optimal_contract_B(p).s == 1);
  } else {
    CHECK(std::abs(m) < 1e-12);  // rounding; sign rule still applies
    CHECK(optimal_contract_B(p).s == (m >= 0.0 ? 1 : 0));
  }
}
