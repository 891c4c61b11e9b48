#include "medshare/scenario_a.hpp"

#include <stdexcept>

namespace medshare {

void ScenarioAParams::validate() const {
  utility.validate();
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0,1)");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("gamma must lie in (0,1)");
  if (!(alpha < gamma))
    throw std::invalid_argument("alpha < gamma required");
  if (!(V >= 0.0)) throw std::invalid_argument("V must be >= 0");
  if (!(W >= 0.0)) throw std::invalid_argument("W must be >= 0");
  if (!(L > 0.0)) throw std::invalid_argument("L must be > 0");
  if (!(psi > 0.0)) throw std::invalid_argument("psi must be > 0");
}

double firm_profit(const ScenarioAParams& p, double phi, double t, int i) {
  if (i != 0 && i != 1) throw std::invalid_argument("investment must be 0 or 1");
  return i == 0 ? p.V - phi - p.gamma * t : p.V - phi - p.psi - p.alpha * t;
}

int firm_best_response(const ScenarioAParams& p, double /*phi*/, double t) {
  // F^h >= F^l  <=>  (gamma - alpha)*t >= psi; phi cancels.
  return (p.gamma - p.alpha) * t >= p.psi ? 1 : 0;
}

double wealth_A_breach(const ScenarioAParams& p, double phi, double t,
                       double L_c, int i) {
  const double q = i == 1 ? p.alpha : p.gamma;
  return p.W + phi - q * L_c - p.L + t + L_c;
}

double wealth_A_no_breach(const ScenarioAParams& p, double phi, double t,
                          double L_c, int i) {
  (void)t;
  const double q = i == 1 ? p.alpha : p.gamma;
  return p.W + phi - q * L_c;
}

double provider_utility_A(const ScenarioAParams& p, double phi, double t,
                          double L_c, int i) {
  const double q = i == 1 ? p.alpha : p.gamma;
  const double wb = wealth_A_breach(p, phi, t, L_c, i);
  const double wn = wealth_A_no_breach(p, phi, t, L_c, i);
  return q * eval_utility(p.utility, wb) + (1.0 - q) * eval_utility(p.utility, wn);
}

}  // namespace medshare
