#include "medshare/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace medshare {

ThresholdReport investment_threshold(const ScenarioAParams& p) {
  p.validate();
  ThresholdReport r;
  const double d = p.gamma - p.alpha;
  r.psi_threshold_L = d * p.L;
  r.psi_threshold_V = d * p.V / p.gamma;
  r.psi_star = std::min(r.psi_threshold_L, r.psi_threshold_V);
  if (r.psi_threshold_L < r.psi_threshold_V)
    r.binding = ThresholdReport::Binding::liability;
  else if (r.psi_threshold_V < r.psi_threshold_L)
    r.binding = ThresholdReport::Binding::value;
  else
    r.binding = ThresholdReport::Binding::both;
  return r;
}

SweepSeriesA sweep_psi(const ScenarioAParams& p,
                       std::span<const double> psi_values) {
  if (psi_values.empty()) throw std::invalid_argument("empty sweep");
  for (std::size_t i = 0; i < psi_values.size(); ++i) {
    if (!(psi_values[i] > 0.0))
      throw std::invalid_argument("sweep psi values must be positive");
    if (i > 0 && !(psi_values[i] > psi_values[i - 1]))
      throw std::invalid_argument("sweep psi values must be ascending");
  }
  SweepSeriesA series;
  series.points.reserve(psi_values.size());
  for (double psi : psi_values) {
    ScenarioAParams q = p;
    q.psi = psi;
    SweepPointA pt;
    pt.psi = psi;
    pt.contract = optimal_contract_A(q);
    pt.certainty_equivalent = wealth_A_no_breach(
        q, pt.contract.phi, pt.contract.t, pt.contract.L_c, pt.contract.investment);
    series.points.push_back(pt);
  }
  return series;
}

SweepSeriesB sweep_k(const ScenarioBParams& p, std::span<const int> k_values) {
  if (k_values.empty()) throw std::invalid_argument("empty sweep");
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (k_values[i] < 2)
      throw std::invalid_argument("sweep k values must be >= 2");
    if (i > 0 && !(k_values[i] > k_values[i - 1]))
      throw std::invalid_argument("sweep k values must be ascending");
  }
  SweepSeriesB series;
  series.points.reserve(k_values.size());
  for (int k : k_values) {
    ScenarioBParams q = p;
    q.k = k;
    SweepPointB pt;
    pt.k = k;
    pt.h1 = provider_utility_B(q, 0.0, q.L, 0);
    pt.hk = provider_utility_B(q, 0.0, q.L, 1);
    pt.margin = participation_margin(q);
    pt.participate = pt.margin >= 0.0 ? 1 : 0;
    series.points.push_back(pt);
  }
  return series;
}

ParticipationReport participation_threshold(const ScenarioBParams& p, int k_max) {
  if (k_max < 2) throw std::invalid_argument("k_max must be >= 2");
  ParticipationReport r;
  r.k_max = k_max;
  int prev_sign = -2;
  for (int k = 2; k <= k_max; ++k) {
    ScenarioBParams q = p;
    q.k = k;
    const double m = participation_margin(q);
    r.margins.push_back(m);
    const int sign = m >= 0.0 ? 1 : 0;
    if (sign == 1) r.participating_k.push_back(k);
    if (prev_sign != -2 && sign != prev_sign) r.change_points.push_back(k);
    prev_sign = sign;
  }
  r.single_crossing = r.change_points.size() <= 1;
  if (r.single_crossing && !r.participating_k.empty())
    r.k_star = r.participating_k.back();
  return r;
}

}  // namespace medshare
