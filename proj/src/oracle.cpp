#include "medshare/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace medshare {

void GridSpec::validate() const {
  if (n_phi < 2 || n_t < 2 || n_Lc < 2)
    throw std::invalid_argument("grid counts must be >= 2");
}

double grid_point(double lo, double hi, int n, int i) {
  if (i == 0) return lo;
  if (i == n - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

namespace {

constexpr double kParticipationSlack = 1e-12;

struct ExpEval {
  double a;
  double operator()(double x) const { return 1.0 - std::exp(-a * x); }
};
struct SqrtEval {
  double operator()(double x) const {
    if (x < 0.0)
      throw UtilityDomainError("power utility undefined for negative wealth", x);
    return std::sqrt(x);
  }
};
struct PowEval {
  double b;
  double operator()(double x) const {
    if (x < 0.0)
      throw UtilityDomainError("power utility undefined for negative wealth", x);
    return std::pow(x, b);
  }
};
struct LogEval {
  double c;
  double operator()(double x) const {
    if (x <= -c)
      throw UtilityDomainError("log_shifted utility undefined at wealth", x);
    return std::log(x + c);
  }
};

template <class Eval>
OracleResultA solve_a(const ScenarioAParams& p, const GridSpec& g, Eval u) {
  OracleResultA r;
  r.grid = g;
  double best_val = -std::numeric_limits<double>::infinity();
  double best_phi = 0.0, best_t = 0.0, best_lc = 0.0;
  int best_inv = 0;
  bool found = false;

  for (int it = 0; it < g.n_t; ++it) {
    const double t = grid_point(0.0, p.L, g.n_t, it);
    const int inv = firm_best_response(p, 0.0, t);
    const double q = inv == 1 ? p.alpha : p.gamma;
    const double fixed_cost = inv == 1 ? p.psi + p.alpha * t : p.gamma * t;
    for (int ip = 0; ip < g.n_phi; ++ip) {
      const double phi = grid_point(0.0, p.V, g.n_phi, ip);
      // Profit decreases in phi, so the rest of this row is infeasible too.
      if (p.V - phi - fixed_cost < -kParticipationSlack) break;
      r.feasible_points += g.n_Lc;
      const double base_n = p.W + phi;          // - q*L_c
      const double base_b = base_n + t - p.L;   // + (1-q)*L_c
      for (int il = 0; il < g.n_Lc; ++il) {
        const double lc = grid_point(0.0, p.L, g.n_Lc, il);
        const double val =
            q * u(base_b + (1.0 - q) * lc) + (1.0 - q) * u(base_n - q * lc);
        if (val > best_val ||
            (val == best_val &&
             std::tie(phi, t, lc) < std::tie(best_phi, best_t, best_lc))) {
          best_val = val;
          best_phi = phi;
          best_t = t;
          best_lc = lc;
          best_inv = inv;
          found = true;
        }
      }
    }
  }
  if (!found)
    throw std::runtime_error("grid_solve_A: no feasible grid point");
  r.best = ContractA{best_phi, best_t, best_lc, best_inv, best_val};
  r.value = best_val;
  return r;
}

}  // namespace

OracleResultA grid_solve_A(const ScenarioAParams& p, const GridSpec& g) {
  p.validate();
  g.validate();
  switch (p.utility.family) {
    case UtilityFamily::exponential:
      return solve_a(p, g, ExpEval{p.utility.risk_param});
    case UtilityFamily::power:
      if (p.utility.risk_param == 0.5) return solve_a(p, g, SqrtEval{});
      return solve_a(p, g, PowEval{p.utility.risk_param});
    case UtilityFamily::log_shifted:
      return solve_a(p, g, LogEval{p.utility.risk_param});
  }
  throw std::invalid_argument("unknown utility family");
}

OracleResultB grid_solve_B(const ScenarioBParams& p, const GridSpec& g) {
  p.validate();
  g.validate();
  const double p1 = breach_prob(p.breach, 1);
  const double pk = breach_prob(p.breach, p.k);
  const double vk = value_scale(p.scale, p.k);

  OracleResultB r;
  r.grid = g;
  double best_val = -std::numeric_limits<double>::infinity();
  int best_s = 0;
  double best_t = 0.0, best_lc = 0.0;

  for (int s = 0; s <= 1; ++s) {
    for (int it = 0; it < g.n_t; ++it) {
      const double t = grid_point(0.0, p.L, g.n_t, it);
      for (int il = 0; il < g.n_Lc; ++il) {
        const double lc = grid_point(0.0, p.L, g.n_Lc, il);
        double val;
        if (s == 0) {
          val = p1 * eval_utility(p.utility, p.W - p1 * lc - p.L + lc) +
                (1.0 - p1) * eval_utility(p.utility, p.W - p1 * lc);
        } else {
          const double base = vk * p.W - pk * lc;
          val = p1 * eval_utility(p.utility, base - p.L - (p.k - 1) * t + lc) +
                (pk - p1) * eval_utility(p.utility, base - p.L + t + lc) +
                (1.0 - pk) * eval_utility(p.utility, base);
        }
        ++r.feasible_points;
        if (val > best_val ||
            (val == best_val &&
             std::tie(s, t, lc) < std::tie(best_s, best_t, best_lc))) {
          best_val = val;
          best_s = s;
          best_t = t;
          best_lc = lc;
        }
      }
    }
  }
  r.best = ContractB{best_s, best_t, best_lc, best_val};
  r.value = best_val;
  return r;
}

double agreement_tolerance_A(const ScenarioAParams& p, const GridSpec& g) {
  const double h = std::max({p.V / (g.n_phi - 1), p.L / (g.n_t - 1),
                             p.L / (g.n_Lc - 1)});
  // U' is decreasing, so the slope maximum over all grid wealths is attained
  // at the smallest one, W - L (phi = t = L_c = 0, breach outcome).
  const double slope = utility_derivative(p.utility, p.W - p.L);
  return 4.0 * h * slope;
}

}  // namespace medshare
