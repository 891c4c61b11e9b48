#include "medshare/scenario_b.hpp"

#include <cmath>
#include <sstream>

namespace medshare {

namespace {

double breach_prob_raw(const BreachProbSpec& s, int k) {
  switch (s.family) {
    case BreachProbSpec::Family::compound:
      return 1.0 - std::pow(1.0 - s.p1, k);
    case BreachProbSpec::Family::saturating:
      return s.p_max * (1.0 - std::pow(1.0 - s.p1 / s.p_max, k));
    case BreachProbSpec::Family::linear:
      return static_cast<double>(k) * s.p1;
  }
  throw std::invalid_argument("unknown breach probability family");
}

[[noreturn]] void invariant_fail(const std::string& ineq, int k,
                                 double lhs, double rhs) {
  std::ostringstream os;
  os << "breach_prob: " << ineq << " violated at k=" << k << " (" << lhs
     << " vs " << rhs << ")";
  throw InvariantError(os.str());
}

}  // namespace

void BreachProbSpec::validate() const {
  if (!(p1 > 0.0 && p1 < 1.0))
    throw InvariantError("breach_prob: p(1) in (0,1) violated");
  if (family == Family::saturating && !(p_max > p1 && p_max <= 1.0))
    throw InvariantError("breach_prob: p1 < p_max <= 1 violated");
}

std::string BreachProbSpec::family_name() const {
  switch (family) {
    case Family::compound: return "compound";
    case Family::saturating: return "saturating";
    case Family::linear: return "linear";
  }
  return "?";
}

double breach_prob(const BreachProbSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("breach_prob: k must be >= 1");
  spec.validate();
  // Invariants checked up to the requested k, with slack for rounding.
  constexpr double eps = 1e-12;
  double prev2 = 0.0, prev = spec.p1;
  for (int j = 2; j <= k; ++j) {
    const double pj = breach_prob_raw(spec, j);
    if (!(pj > 0.0 && pj < 1.0))
      invariant_fail("0 < p(k) < 1", j, pj, 1.0);
    if (!(pj > prev - eps))
      invariant_fail("p(k) > p(k-1)", j, pj, prev);
    if (!(pj < j * spec.p1 - eps * j))
      invariant_fail("p(k) < k*p(1)", j, pj, j * spec.p1);
    if (j >= 3 && !(pj - prev <= prev - prev2 + eps))
      invariant_fail("p(k+1)-p(k) <= p(k)-p(k-1)", j, pj - prev, prev - prev2);
    prev2 = prev;
    prev = pj;
  }
  return k == 1 ? spec.p1 : prev;
}

void ValueScaleSpec::validate() const {
  switch (family) {
    case Family::power:
      if (!(param > 0.0 && param < 1.0))
        throw InvariantError("value_scale: power family requires beta in (0,1)");
      return;
    case Family::log:
      if (!(param > 0.0))
        throw InvariantError("value_scale: log family requires c > 0");
      return;
  }
  throw std::invalid_argument("unknown value scale family");
}

std::string ValueScaleSpec::family_name() const {
  return family == Family::power ? "power" : "log";
}

double value_scale(const ValueScaleSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("value_scale: k must be >= 1");
  spec.validate();
  if (k == 1) return 1.0;
  switch (spec.family) {
    case ValueScaleSpec::Family::power:
      return std::pow(static_cast<double>(k), spec.param);
    case ValueScaleSpec::Family::log:
      return 1.0 + spec.param * std::log(static_cast<double>(k));
  }
  throw std::invalid_argument("unknown value scale family");
}

void ScenarioBParams::validate() const {
  utility.validate();
  if (!(W >= 0.0)) throw std::invalid_argument("W must be >= 0");
  if (!(L > 0.0)) throw std::invalid_argument("L must be > 0");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  breach_prob(breach, k);
  value_scale(scale, k);
}

double provider_utility_B(const ScenarioBParams& p, double t, double L_c,
                          int participate) {
  const double p1 = breach_prob(p.breach, 1);
  if (participate == 0) {
    const double wb = p.W - p1 * L_c - p.L + L_c;
    const double wn = p.W - p1 * L_c;
    return p1 * eval_utility(p.utility, wb) +
           (1.0 - p1) * eval_utility(p.utility, wn);
  }
  const double pk = breach_prob(p.breach, p.k);
  const double vk = value_scale(p.scale, p.k);
  const double base = vk * p.W - pk * L_c;
  const double w_own = base - p.L - (p.k - 1) * t + L_c;
  const double w_other = base - p.L + t + L_c;
  const double w_none = base;
  return p1 * eval_utility(p.utility, w_own) +
         (pk - p1) * eval_utility(p.utility, w_other) +
         (1.0 - pk) * eval_utility(p.utility, w_none);
}

}  // namespace medshare
