#include "medshare/utility.hpp"

#include <cmath>

namespace medshare {

void UtilitySpec::validate() const {
  switch (family) {
    case UtilityFamily::exponential:
      if (!(risk_param > 0.0))
        throw std::invalid_argument("exponential utility requires a > 0");
      return;
    case UtilityFamily::power:
      if (!(risk_param > 0.0 && risk_param < 1.0))
        throw std::invalid_argument("power utility requires beta in (0,1)");
      return;
    case UtilityFamily::log_shifted:
      if (!(risk_param > 0.0))
        throw std::invalid_argument("log_shifted utility requires shift c > 0");
      return;
  }
  throw std::invalid_argument("unknown utility family");
}

double UtilitySpec::domain_lower_bound() const {
  switch (family) {
    case UtilityFamily::exponential:
      return -std::numeric_limits<double>::infinity();
    case UtilityFamily::power:
      return 0.0;
    case UtilityFamily::log_shifted:
      return -risk_param;
  }
  return 0.0;
}

bool UtilitySpec::in_domain(double x) const {
  switch (family) {
    case UtilityFamily::exponential:
      return true;
    case UtilityFamily::power:
      return x >= 0.0;
    case UtilityFamily::log_shifted:
      return x > -risk_param;
  }
  return false;
}

double eval_utility(const UtilitySpec& u, double x) {
  switch (u.family) {
    case UtilityFamily::exponential:
      return 1.0 - std::exp(-u.risk_param * x);
    case UtilityFamily::power:
      if (x < 0.0)
        throw UtilityDomainError(
            "power utility undefined for negative wealth " + std::to_string(x), x);
      return std::pow(x, u.risk_param);
    case UtilityFamily::log_shifted:
      if (x <= -u.risk_param)
        throw UtilityDomainError(
            "log_shifted utility undefined at wealth " + std::to_string(x) +
                " (shift " + std::to_string(u.risk_param) + ")",
            x);
      return std::log(x + u.risk_param);
  }
  throw std::invalid_argument("unknown utility family");
}

double utility_derivative(const UtilitySpec& u, double x) {
  switch (u.family) {
    case UtilityFamily::exponential:
      return u.risk_param * std::exp(-u.risk_param * x);
    case UtilityFamily::power:
      if (x < 0.0)
        throw UtilityDomainError(
            "power utility undefined for negative wealth " + std::to_string(x), x);
      return u.risk_param * std::pow(x, u.risk_param - 1.0);
    case UtilityFamily::log_shifted:
      if (x <= -u.risk_param)
        throw UtilityDomainError(
            "log_shifted utility undefined at wealth " + std::to_string(x), x);
      return 1.0 / (x + u.risk_param);
  }
  throw std::invalid_argument("unknown utility family");
}

std::string to_string(UtilityFamily f) {
  switch (f) {
    case UtilityFamily::exponential:
      return "exponential";
    case UtilityFamily::power:
      return "power";
    case UtilityFamily::log_shifted:
      return "log_shifted";
  }
  return "?";
}

}  // namespace medshare
