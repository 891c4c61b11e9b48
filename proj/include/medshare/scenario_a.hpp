#pragma once

#include "medshare/utility.hpp"

namespace medshare {

// Provider-sells-data-to-firm scenario. The provider designs a contract
// (purchase price phi, breach fine t, insurance payout L_c); the firm then
// picks a hidden cybersecurity investment level i in {0,1}.
struct ScenarioAParams {
  double V = 0.0;      // value of the data to the firm
  double W = 0.0;      // value of the data to the provider
  double L = 0.0;      // provider liability on breach
  double psi = 0.0;    // cost of high investment
  double alpha = 0.0;  // breach probability under high investment
  double gamma = 0.0;  // breach probability under low investment
  UtilitySpec utility;

  void validate() const;
};

struct ContractA {
  double phi = 0.0;
  double t = 0.0;
  double L_c = 0.0;
  int investment = 0;  // induced firm best response
  double provider_value = 0.0;
};

// Expected firm profit at investment level i: V - phi - gamma*t (i = 0) or
// V - phi - psi - alpha*t (i = 1). The firm is risk neutral.
double firm_profit(const ScenarioAParams& p, double phi, double t, int i);

// Profit-maximizing investment level. Ties at (gamma - alpha)*t = psi
// resolve to i = 1.
int firm_best_response(const ScenarioAParams& p, double phi, double t);

// Provider expected utility under (phi, t, L_c) given induced investment i.
// The actuarially fair premium uses the breach probability matching i.
double provider_utility_A(const ScenarioAParams& p, double phi, double t,
                          double L_c, int i);

// Realized provider wealths in the two outcomes (premium already deducted).
double wealth_A_breach(const ScenarioAParams& p, double phi, double t,
                       double L_c, int i);
double wealth_A_no_breach(const ScenarioAParams& p, double phi, double t,
                          double L_c, int i);

}  // namespace medshare
