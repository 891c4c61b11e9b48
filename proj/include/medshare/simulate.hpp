#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "medshare/scenario_a.hpp"
#include "medshare/scenario_b.hpp"

namespace medshare {

// Seeded Monte Carlo check of an analytical expected utility. Reproducible
// bit-for-bit from (params, contract, n, seed): outcomes are drawn from
// mt19937_64 seeded directly with the 64-bit seed, and uniforms are built as
// (x >> 11) * 2^-53 so no implementation-defined distribution is involved.
struct SimReport {
  std::int64_t n = 0;
  double sample_mean = 0.0;
  double std_error = 0.0;
  double analytic = 0.0;
  double z = 0.0;
  std::uint64_t seed = 0;
  std::string generator = "mt19937_64";
  // outcome tallies: {breach, -, no breach} for A;
  // {own breach, other member's breach, no breach} for B.
  std::array<std::int64_t, 3> outcome_counts{0, 0, 0};
};

SimReport simulate_A(const ScenarioAParams& p, const ContractA& c,
                     std::int64_t n, std::uint64_t seed);

SimReport simulate_B(const ScenarioBParams& p, const ContractB& c,
                     std::int64_t n, std::uint64_t seed);

}  // namespace medshare
