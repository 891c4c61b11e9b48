#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "medshare/closed_form.hpp"

namespace medshare {

// Both investment-cost thresholds plus the effective switch point
// psi* = min((gamma-alpha)*L, (gamma-alpha)*V/gamma). The psi field of the
// params is ignored.
ThresholdReport investment_threshold(const ScenarioAParams& p);

struct SweepPointA {
  double psi = 0.0;
  ContractA contract;
  double certainty_equivalent = 0.0;  // common wealth under full insurance
};

struct SweepSeriesA {
  std::string axis = "psi";
  std::vector<SweepPointA> points;
};

// Optimal contract per psi value (ascending, positive). While the high
// branch holds, certainty-equivalent wealth is W + V - psi - alpha*L; past
// the threshold every point is the identical low-branch contract.
SweepSeriesA sweep_psi(const ScenarioAParams& p,
                       std::span<const double> psi_values);

struct SweepPointB {
  int k = 0;
  double h1 = 0.0;      // standalone expected utility, constant in k
  double hk = 0.0;      // consortium expected utility at (t=0, L_c=L)
  int participate = 0;  // s* from the margin rule
  double margin = 0.0;
};

struct SweepSeriesB {
  std::string axis = "k";
  std::vector<SweepPointB> points;
};

// H^1, H^k and s* per consortium size (ascending, each >= 2).
SweepSeriesB sweep_k(const ScenarioBParams& p, std::span<const int> k_values);

struct ParticipationReport {
  int k_max = 0;
  std::vector<double> margins;       // margin at k = 2..k_max
  std::vector<int> participating_k;  // k with margin >= 0
  std::vector<int> change_points;    // k where the participation sign flips
  bool single_crossing = true;       // at most one flip over [2, k_max]
  std::optional<int> k_star;         // largest participating k, if single
};

// Scans the participation margin for k = 2..k_max. A single sign change
// yields the largest participating k*; multiple changes are reported and
// flagged rather than rejected.
ParticipationReport participation_threshold(const ScenarioBParams& p, int k_max);

}  // namespace medshare
