#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace medshare {

// Thrown when a wealth argument falls outside a utility family's valid
// domain. Carries the offending wealth so callers can report it.
class UtilityDomainError : public std::domain_error {
 public:
  UtilityDomainError(const std::string& what, double wealth)
      : std::domain_error(what), wealth_(wealth) {}
  double wealth() const { return wealth_; }

 private:
  double wealth_;
};

enum class UtilityFamily { exponential, power, log_shifted };

// A risk-averse utility U(.): strictly increasing, strictly concave,
// differentiable on its valid domain.
//   exponential: U(x) = 1 - exp(-a*x), a > 0, domain all reals
//   power:       U(x) = x^beta, beta in (0,1), domain x >= 0
//   log_shifted: U(x) = ln(x + c), c > 0, domain x > -c
struct UtilitySpec {
  UtilityFamily family = UtilityFamily::power;
  double risk_param = 0.5;

  void validate() const;

  // Lower edge of the valid domain (-inf for exponential). Power admits
  // the bound itself; log_shifted does not.
  double domain_lower_bound() const;
  bool in_domain(double x) const;
};

double eval_utility(const UtilitySpec& u, double x);

// Analytic U'(x); same domain rules as eval_utility.
double utility_derivative(const UtilitySpec& u, double x);

std::string to_string(UtilityFamily f);

}  // namespace medshare
