#include "medshare/config.hpp"

#include <fstream>

#include <json.hpp>

namespace medshare {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

const json& require(const json& j, const std::string& path, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing required field");
  return *it;
}

double number(const json& j, const std::string& path, const std::string& key) {
  const json& v = require(j, path, key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

std::int64_t integer(const json& j, const std::string& path, const std::string& key) {
  const json& v = require(j, path, key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<std::int64_t>();
}

std::string text(const json& j, const std::string& path, const std::string& key) {
  const json& v = require(j, path, key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

UtilitySpec parse_utility(const json& j, const std::string& path) {
  UtilitySpec u;
  const std::string fam = text(j, path, "family");
  if (fam == "exponential") {
    u.family = UtilityFamily::exponential;
    u.risk_param = number(j, path, "a");
  } else if (fam == "power") {
    u.family = UtilityFamily::power;
    u.risk_param = number(j, path, "beta");
  } else if (fam == "log_shifted" || fam == "log-shifted") {
    u.family = UtilityFamily::log_shifted;
    u.risk_param = number(j, path, "shift");
  } else {
    fail(path + ".family", "unknown utility family '" + fam + "'");
  }
  try {
    u.validate();
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  return u;
}

BreachProbSpec parse_breach(const json& j, const std::string& path) {
  BreachProbSpec s;
  const std::string fam = text(j, path, "family");
  if (fam == "compound") {
    s.family = BreachProbSpec::Family::compound;
  } else if (fam == "saturating") {
    s.family = BreachProbSpec::Family::saturating;
    s.p_max = number(j, path, "p_max");
  } else if (fam == "linear") {
    s.family = BreachProbSpec::Family::linear;
  } else {
    fail(path + ".family", "unknown breach probability family '" + fam + "'");
  }
  s.p1 = number(j, path, "p1");
  try {
    s.validate();
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  return s;
}

ValueScaleSpec parse_scale(const json& j, const std::string& path) {
  ValueScaleSpec s;
  const std::string fam = text(j, path, "family");
  if (fam == "power") {
    s.family = ValueScaleSpec::Family::power;
    s.param = number(j, path, "beta");
  } else if (fam == "log") {
    s.family = ValueScaleSpec::Family::log;
    s.param = number(j, path, "c");
  } else {
    fail(path + ".family", "unknown value scale family '" + fam + "'");
  }
  try {
    s.validate();
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  return s;
}

}  // namespace

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("top level must be a JSON object");

  ConfigFile cfg;
  const std::string scenario = text(j, "$", "scenario");
  if (scenario != "A" && scenario != "B")
    fail("$.scenario", "must be \"A\" or \"B\"");
  cfg.scenario = scenario[0];

  const json& params = require(j, "$", "params");
  const UtilitySpec utility = parse_utility(require(j, "$", "utility"), "$.utility");

  if (cfg.scenario == 'A') {
    ScenarioAParams p;
    p.V = number(params, "$.params", "V");
    p.W = number(params, "$.params", "W");
    p.L = number(params, "$.params", "L");
    p.psi = number(params, "$.params", "psi");
    p.alpha = number(params, "$.params", "alpha");
    p.gamma = number(params, "$.params", "gamma");
    p.utility = utility;
    try {
      p.validate();
    } catch (const std::exception& e) {
      fail("$.params", e.what());
    }
    cfg.a = p;
  } else {
    ScenarioBParams p;
    p.W = number(params, "$.params", "W");
    p.L = number(params, "$.params", "L");
    p.k = static_cast<int>(integer(params, "$.params", "k"));
    p.breach = parse_breach(require(j, "$", "breach"), "$.breach");
    p.scale = parse_scale(require(j, "$", "scale"), "$.scale");
    p.utility = utility;
    try {
      p.validate();
    } catch (const std::exception& e) {
      fail("$.params", e.what());
    }
    cfg.b = p;
  }

  if (auto it = j.find("grid"); it != j.end()) {
    GridSpec g;
    g.n_phi = static_cast<int>(it->value("n_phi", 401));
    g.n_t = static_cast<int>(it->value("n_t", 401));
    g.n_Lc = static_cast<int>(it->value("n_Lc", 401));
    try {
      g.validate();
    } catch (const std::exception& e) {
      fail("$.grid", e.what());
    }
    cfg.grid = g;
  }

  if (auto it = j.find("sweep"); it != j.end()) {
    SweepBlock s;
    s.axis = text(*it, "$.sweep", "axis");
    if (s.axis != "psi" && s.axis != "k")
      fail("$.sweep.axis", "must be \"psi\" or \"k\"");
    if ((s.axis == "psi") != (cfg.scenario == 'A'))
      fail("$.sweep.axis", "axis does not match scenario");
    s.start = number(*it, "$.sweep", "start");
    s.stop = number(*it, "$.sweep", "stop");
    s.steps = static_cast<int>(integer(*it, "$.sweep", "steps"));
    if (s.steps < 1 || !(s.stop >= s.start)) fail("$.sweep", "empty sweep");
    cfg.sweep = s;
  }

  if (auto it = j.find("simulate"); it != j.end()) {
    SimulateBlock s;
    s.n = integer(*it, "$.simulate", "n");
    if (s.n < 1) fail("$.simulate.n", "n must be >= 1");
    s.seed = static_cast<std::uint64_t>(integer(*it, "$.simulate", "seed"));
    cfg.simulate = s;
  }

  if (auto it = j.find("contract"); it != j.end()) {
    if (cfg.scenario == 'A') {
      ContractOverrideA c;
      c.phi = number(*it, "$.contract", "phi");
      c.t = number(*it, "$.contract", "t");
      c.L_c = number(*it, "$.contract", "L_c");
      c.investment = static_cast<int>(integer(*it, "$.contract", "investment"));
      if (c.investment != 0 && c.investment != 1)
        fail("$.contract.investment", "must be 0 or 1");
      if (!(c.phi >= 0.0 && c.t >= 0.0 && c.t <= cfg.a->L && c.L_c >= 0.0))
        fail("$.contract", "infeasible contract (phi >= 0, t in [0,L], L_c >= 0)");
      if (c.investment != firm_best_response(*cfg.a, c.phi, c.t))
        fail("$.contract.investment", "does not match the firm's best response");
      cfg.contract_a = c;
    } else {
      ContractOverrideB c;
      c.s = static_cast<int>(integer(*it, "$.contract", "s"));
      if (c.s != 0 && c.s != 1) fail("$.contract.s", "must be 0 or 1");
      c.t = number(*it, "$.contract", "t");
      c.L_c = number(*it, "$.contract", "L_c");
      if (!(c.t >= 0.0 && c.t <= cfg.b->L && c.L_c >= 0.0))
        fail("$.contract", "infeasible contract (t in [0,L], L_c >= 0)");
      cfg.contract_b = c;
    }
  }

  if (auto it = j.find("k_max"); it != j.end()) {
    if (!it->is_number_integer()) fail("$.k_max", "expected an integer");
    cfg.k_max = it->get<int>();
    if (cfg.k_max < 2) fail("$.k_max", "must be >= 2");
  }

  return cfg;
}

}  // namespace medshare
