#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "medshare/oracle.hpp"
#include "medshare/scenario_a.hpp"
#include "medshare/scenario_b.hpp"

namespace medshare {

// Config rejection with the offending field path in the message.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepBlock {
  std::string axis;  // "psi" (scenario A) or "k" (scenario B)
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
};

struct SimulateBlock {
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};

// Optional explicit contract, used by `simulate` to exercise suboptimal
// (nondegenerate) contracts instead of the closed-form optimum.
struct ContractOverrideA {
  double phi = 0.0;
  double t = 0.0;
  double L_c = 0.0;
  int investment = 0;
};

struct ContractOverrideB {
  int s = 0;
  double t = 0.0;
  double L_c = 0.0;
};

struct ConfigFile {
  char scenario = 'A';
  std::optional<ScenarioAParams> a;
  std::optional<ScenarioBParams> b;
  std::optional<GridSpec> grid;
  std::optional<SweepBlock> sweep;
  std::optional<SimulateBlock> simulate;
  std::optional<ContractOverrideA> contract_a;
  std::optional<ContractOverrideB> contract_b;
  int k_max = 64;
};

// Parses and fully revalidates a JSON config; throws ConfigError with the
// field path on any violation.
ConfigFile load_config(const std::string& path);

}  // namespace medshare
