#include "medshare/simulate.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace medshare {

namespace {

double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Outcome wealths are constant per category, so the sample mean and variance
// reduce exactly to category counts; the arithmetic below matches a sample
// loop bit-for-bit while staying O(1) after counting.
SimReport finalize(std::int64_t n, std::uint64_t seed, double analytic,
                   const std::array<std::int64_t, 3>& counts,
                   const std::array<double, 3>& utilities) {
  SimReport r;
  r.n = n;
  r.seed = seed;
  r.analytic = analytic;
  r.outcome_counts = counts;
  double sum = 0.0, sumsq = 0.0;
  for (int j = 0; j < 3; ++j) {
    sum += static_cast<double>(counts[j]) * utilities[j];
    sumsq += static_cast<double>(counts[j]) * utilities[j] * utilities[j];
  }
  r.sample_mean = sum / static_cast<double>(n);
  double var = 0.0;
  if (n > 1) {
    var = (sumsq - static_cast<double>(n) * r.sample_mean * r.sample_mean) /
          static_cast<double>(n - 1);
    if (var < 0.0) var = 0.0;
  }
  r.std_error = std::sqrt(var / static_cast<double>(n));
  if (r.std_error > 0.0) {
    r.z = (r.sample_mean - analytic) / r.std_error;
  } else {
    r.z = std::abs(r.sample_mean - analytic) <= 1e-12
              ? 0.0
              : std::numeric_limits<double>::infinity();
  }
  return r;
}

}  // namespace

SimReport simulate_A(const ScenarioAParams& p, const ContractA& c,
                     std::int64_t n, std::uint64_t seed) {
  p.validate();
  if (n < 1) throw std::invalid_argument("simulate_A: n must be >= 1");
  if (!(c.phi >= 0.0 && c.t >= 0.0 && c.t <= p.L && c.L_c >= 0.0))
    throw std::invalid_argument("simulate_A: infeasible contract");
  const double q = c.investment == 1 ? p.alpha : p.gamma;
  const double u_breach = eval_utility(
      p.utility, wealth_A_breach(p, c.phi, c.t, c.L_c, c.investment));
  const double u_none = eval_utility(
      p.utility, wealth_A_no_breach(p, c.phi, c.t, c.L_c, c.investment));

  std::mt19937_64 eng(seed);
  std::array<std::int64_t, 3> counts{0, 0, 0};
  for (std::int64_t i = 0; i < n; ++i) {
    if (uniform01(eng) < q)
      ++counts[0];
    else
      ++counts[2];
  }
  const double analytic =
      provider_utility_A(p, c.phi, c.t, c.L_c, c.investment);
  return finalize(n, seed, analytic, counts, {u_breach, 0.0, u_none});
}

SimReport simulate_B(const ScenarioBParams& p, const ContractB& c,
                     std::int64_t n, std::uint64_t seed) {
  p.validate();
  if (n < 1) throw std::invalid_argument("simulate_B: n must be >= 1");
  if (!(c.t >= 0.0 && c.t <= p.L && c.L_c >= 0.0))
    throw std::invalid_argument("simulate_B: infeasible contract");

  const double p1 = breach_prob(p.breach, 1);
  std::array<double, 3> utilities{0.0, 0.0, 0.0};
  double cut_own, cut_any;
  if (c.s == 0) {
    cut_own = p1;
    cut_any = p1;
    utilities[0] = eval_utility(p.utility, p.W - p1 * c.L_c - p.L + c.L_c);
    utilities[2] = eval_utility(p.utility, p.W - p1 * c.L_c);
  } else {
    const double pk = breach_prob(p.breach, p.k);
    const double vk = value_scale(p.scale, p.k);
    const double base = vk * p.W - pk * c.L_c;
    cut_own = p1;
    cut_any = pk;
    utilities[0] =
        eval_utility(p.utility, base - p.L - (p.k - 1) * c.t + c.L_c);
    utilities[1] = eval_utility(p.utility, base - p.L + c.t + c.L_c);
    utilities[2] = eval_utility(p.utility, base);
  }

  std::mt19937_64 eng(seed);
  std::array<std::int64_t, 3> counts{0, 0, 0};
  for (std::int64_t i = 0; i < n; ++i) {
    const double u = uniform01(eng);
    if (u < cut_own)
      ++counts[0];
    else if (u < cut_any)
      ++counts[1];
    else
      ++counts[2];
  }
  const double analytic = provider_utility_B(p, c.t, c.L_c, c.s);
  return finalize(n, seed, analytic, counts, utilities);
}

}  // namespace medshare
