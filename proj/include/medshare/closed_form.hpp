#pragma once

#include <optional>
#include <utility>

#include "medshare/scenario_a.hpp"
#include "medshare/scenario_b.hpp"

namespace medshare {

// The two cost thresholds that decide whether the optimal contract induces
// high investment: psi <= (gamma-alpha)*L and psi <= (gamma-alpha)*V/gamma.
struct ThresholdReport {
  double psi_threshold_L = 0.0;  // (gamma-alpha)*L
  double psi_threshold_V = 0.0;  // (gamma-alpha)*V/gamma
  double psi_star = 0.0;         // min of the two
  enum class Binding { liability, value, both } binding = Binding::both;
};

// Optimal insurance payout for a given fine: L_c = L - t (full insurance).
double optimal_insurance_A(const ScenarioAParams& p, double t);

// Low-investment branch LP: maximize phi + gamma*t s.t. phi + gamma*t <= V,
// (gamma-alpha)*t < psi. Always feasible; the vertex (V, 0) is optimal.
std::pair<double, double> lp_branch_low(const ScenarioAParams& p);

// High-investment branch LP: maximize phi + alpha*t s.t. phi + alpha*t <=
// V - psi, (gamma-alpha)*t >= psi. Returns nullopt when infeasible, i.e.
// when psi > (gamma-alpha)*L or psi > (gamma-alpha)*V/gamma; otherwise the
// smallest investment-inducing fine and full surplus extraction.
std::optional<std::pair<double, double>> lp_branch_high(const ScenarioAParams& p);

// Optimal contract for the provider-to-firm sale. Low branch (V, 0, L) when
// psi exceeds either threshold; otherwise the high-investment contract
// (V - gamma*psi/(gamma-alpha), psi/(gamma-alpha), L - psi/(gamma-alpha)).
// Ties at equality take the high branch.
ContractA optimal_contract_A(const ScenarioAParams& p);

// Participation margin (v(k)-1)*W - (p(k)-p(1))*L; its sign decides s*.
double participation_margin(const ScenarioBParams& p);

// Optimal consortium contract: t = 0, L_c = L, s = 1 iff the participation
// margin is >= 0 (indifference resolves to participation).
ContractB optimal_contract_B(const ScenarioBParams& p);

}  // namespace medshare
