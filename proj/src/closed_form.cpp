#include "medshare/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace medshare {

double optimal_insurance_A(const ScenarioAParams& p, double t) {
  if (!(t >= 0.0 && t <= p.L))
    throw std::invalid_argument("optimal_insurance_A: t must lie in [0, L]");
  return p.L - t;
}

std::pair<double, double> lp_branch_low(const ScenarioAParams& p) {
  p.validate();
  return {p.V, 0.0};
}

std::optional<std::pair<double, double>> lp_branch_high(const ScenarioAParams& p) {
  p.validate();
  const double d = p.gamma - p.alpha;
  if (p.psi > d * p.L || p.psi > d * p.V / p.gamma) return std::nullopt;
  // Guard against rounding pushing the boundary cases out of [0,L] x [0,V].
  double t = std::min(p.psi / d, p.L);
  // t = psi/d can round below the incentive boundary d*t >= psi; nudge up so
  // the returned fine really induces i = 1.
  while (d * t < p.psi && t < p.L)
    t = std::nextafter(t, std::numeric_limits<double>::infinity());
  const double phi = std::max(p.V - p.gamma * t, 0.0);
  return std::make_pair(phi, t);
}

ContractA optimal_contract_A(const ScenarioAParams& p) {
  ContractA c;
  if (auto high = lp_branch_high(p)) {
    c.phi = high->first;
    c.t = high->second;
    c.investment = 1;
  } else {
    auto low = lp_branch_low(p);
    c.phi = low.first;
    c.t = low.second;
    c.investment = 0;
  }
  c.L_c = optimal_insurance_A(p, c.t);
  c.provider_value = provider_utility_A(p, c.phi, c.t, c.L_c, c.investment);
  return c;
}

double participation_margin(const ScenarioBParams& p) {
  const double vk = value_scale(p.scale, p.k);
  const double pk = breach_prob(p.breach, p.k);
  const double p1 = breach_prob(p.breach, 1);
  return (vk - 1.0) * p.W - (pk - p1) * p.L;
}

ContractB optimal_contract_B(const ScenarioBParams& p) {
  p.validate();
  ContractB c;
  c.s = participation_margin(p) >= 0.0 ? 1 : 0;
  c.t = 0.0;
  c.L_c = p.L;
  c.provider_value = provider_utility_B(p, c.t, c.L_c, c.s);
  return c;
}

}  // namespace medshare
