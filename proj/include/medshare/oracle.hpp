#pragma once

#include <cstdint>

#include "medshare/scenario_a.hpp"
#include "medshare/scenario_b.hpp"

namespace medshare {

// Grid resolution for the brute-force solvers. Bounds come from the params:
// phi in [0, V], t in [0, L], L_c in [0, L]; endpoints are on-grid exactly.
struct GridSpec {
  int n_phi = 401;
  int n_t = 401;
  int n_Lc = 401;

  void validate() const;
};

// Exact grid coordinate: endpoints are hit exactly, interior points are
// lo + (hi-lo)*i/(n-1).
double grid_point(double lo, double hi, int n, int i);

struct OracleResultA {
  ContractA best;
  double value = 0.0;
  GridSpec grid;
  std::int64_t feasible_points = 0;
};

struct OracleResultB {
  ContractB best;
  double value = 0.0;
  GridSpec grid;
  std::int64_t feasible_points = 0;
};

// Enumerates the full (phi, t, L_c) grid of the bilevel sale program: the
// firm's best response i* is computed at each (phi, t), points violating the
// participation constraint (profit >= -1e-12) are discarded, and the
// provider's expected utility is maximized over the rest. Exact value ties
// resolve to the lexicographically smallest (phi, t, L_c).
OracleResultA grid_solve_A(const ScenarioAParams& p, const GridSpec& g = {});

// Enumerates s in {0,1} times the (t, L_c) grid of the consortium program.
// Ties resolve to the lexicographically smallest (s, t, L_c).
OracleResultB grid_solve_B(const ScenarioBParams& p, const GridSpec& g = {});

// Value-agreement tolerance between grid_solve_A and the closed form:
// 4 * (largest grid step) * (max utility slope over the grid's wealth range).
double agreement_tolerance_A(const ScenarioAParams& p, const GridSpec& g = {});

}  // namespace medshare
