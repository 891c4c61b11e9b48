#pragma once

#include <stdexcept>
#include <string>

#include "medshare/utility.hpp"

namespace medshare {

// Thrown when a breach-probability or value-scale spec violates the model's
// standing assumptions; the message names the failed inequality and k.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Breach probability among k providers.
//   compound:   p(k) = 1 - (1 - p1)^k
//   saturating: p(k) = p_max * (1 - (1 - p1/p_max)^k), p1 < p_max <= 1
//   linear:     p(k) = k * p1  -- deliberately violates sublinearity; kept
//               so the invariant checks have a live rejection path
struct BreachProbSpec {
  enum class Family { compound, saturating, linear };
  Family family = Family::compound;
  double p1 = 0.05;
  double p_max = 1.0;  // saturating only

  void validate() const;
  std::string family_name() const;
};

// Evaluates p(k) and checks, for every j up to k, that p(j) lies in (0,1),
// increases strictly, satisfies p(j) < j*p(1) for j >= 2, and is discretely
// concave. Violations raise InvariantError naming the inequality and j.
double breach_prob(const BreachProbSpec& spec, int k);

// Value multiplier for a consortium of k providers, v(1) = 1.
//   power: v(k) = k^beta, beta in (0,1)
//   log:   v(k) = 1 + c*ln(k), c > 0
struct ValueScaleSpec {
  enum class Family { power, log };
  Family family = Family::power;
  double param = 0.5;

  void validate() const;
  std::string family_name() const;
};

double value_scale(const ValueScaleSpec& spec, int k);

// Consortium data-sharing scenario: k identical providers decide whether to
// participate (s), with a breach fine t and insurance payout L_c.
struct ScenarioBParams {
  double W = 0.0;  // value of a provider's own data
  double L = 0.0;  // per-provider liability on any consortium breach
  int k = 2;       // consortium size
  BreachProbSpec breach;
  ValueScaleSpec scale;
  UtilitySpec utility;

  void validate() const;
};

struct ContractB {
  int s = 0;  // participation indicator
  double t = 0.0;
  double L_c = 0.0;
  double provider_value = 0.0;
};

// Expected utility of one provider. participate = 0 gives the standalone
// two-outcome lottery H^1(L_c); participate = 1 gives the three-outcome
// H^k(t, L_c): own breach (pays fine (k-1)*t), another member's breach
// (receives t, probability p(k) - p(1)), or no breach.
double provider_utility_B(const ScenarioBParams& p, double t, double L_c,
                          int participate);

}  // namespace medshare
