#include "banditlab/scenario.hpp"

#include <cassert>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "banditlab/baselines.hpp"
#include "banditlab/subsample.hpp"

namespace banditlab {

double ParamSpec::realize(RandomStream& rng) const {
  switch (draw) {
    case Draw::kFixed:
      return value;
    case Draw::kStdNormal:
      return rng.normal();
    case Draw::kInvSqrtExp: {
      double e;
      do {
        e = rng.exponential(1.0);
      } while (e <= 0.0);
      return 1.0 / std::sqrt(e);
    }
  }
  return value;
}

ArmSpec ArmSpec::iid(RewardModel::Kind family, ParamSpec primary, ParamSpec secondary) {
  ArmSpec spec;
  spec.kind = Kind::kIid;
  spec.family = family;
  spec.primary = primary;
  spec.secondary = secondary;
  return spec;
}

ArmSpec ArmSpec::iid_fixed(const RewardModel& model) {
  ArmSpec spec;
  spec.kind = Kind::kIid;
  spec.family = model.kind;
  spec.primary = ParamSpec::fixed(model.a);
  spec.secondary = ParamSpec::fixed(model.b);
  return spec;
}

ArmSpec ArmSpec::markov_arm(MarkovRewardModel model) {
  ArmSpec spec;
  spec.kind = Kind::kMarkov;
  spec.markov = std::move(model);
  return spec;
}

bool ArmSpec::is_fixed() const {
  if (kind == Kind::kMarkov) return true;
  return primary.is_fixed() && secondary.is_fixed();
}

RewardModel ArmSpec::realize(RandomStream& rng) const {
  assert(kind == Kind::kIid);
  // Draw order is part of the replayability contract, so the primary draw is
  // sequenced explicitly ahead of the secondary one.
  const double first = primary.realize(rng);
  switch (family) {
    case RewardModel::Kind::kBernoulli:
      return RewardModel::bernoulli(first);
    case RewardModel::Kind::kNormal:
      return RewardModel::normal(first, secondary.realize(rng));
    case RewardModel::Kind::kDoubleExponential:
      return RewardModel::double_exponential(first, secondary.realize(rng));
    case RewardModel::Kind::kTruncatedExponential:
      return RewardModel::truncated_exponential(first);
    case RewardModel::Kind::kTruncatedPoisson:
      return RewardModel::truncated_poisson(first);
    case RewardModel::Kind::kUniform:
      return RewardModel::uniform(first, secondary.realize(rng));
    case RewardModel::Kind::kConstant:
      return RewardModel::constant(first);
  }
  return RewardModel::constant(0.0);
}

double ArmSpec::fixed_mean() const {
  assert(is_fixed());
  if (kind == Kind::kMarkov) return markov_true_mean(markov);
  RandomStream unused(0);
  return true_mean(realize(unused));
}

std::string PolicySpec::label() const {
  if (type == "besa" && warm_start == 10) return "besat";
  return make_policy(*this)->name();
}

std::unique_ptr<Policy> make_policy(const PolicySpec& spec) {
  const std::string& t = spec.type;
  if (t == "ssmc") return std::make_unique<SsmcPolicy>(false);
  if (t == "ssmc-star") return std::make_unique<SsmcPolicy>(true);
  if (t == "sstc") return std::make_unique<SstcPolicy>();
  if (t == "besa") return std::make_unique<BesaPolicy>();
  if (t == "ucb1") return std::make_unique<Ucb1Policy>();
  if (t == "ucb-agrawal") return std::make_unique<UcbAgrawalPolicy>();
  if (t == "ucb-lai") return std::make_unique<UcbLaiPolicy>();
  if (t == "ucb1-tuned") return std::make_unique<Ucb1TunedPolicy>();
  if (t == "ucb1-normal") return std::make_unique<Ucb1NormalPolicy>();
  if (t == "kl-ucb") return std::make_unique<KlUcbPolicy>(false);
  if (t == "kl-ucb-plus") return std::make_unique<KlUcbPolicy>(true);
  if (t == "thompson") return std::make_unique<ThompsonPolicy>();
  if (t == "epsilon-greedy" || t == "boltzmann") {
    if (!(spec.parameter > 0.0)) {
      throw std::invalid_argument("policy '" + t + "' needs a positive parameter");
    }
    if (t == "epsilon-greedy") return std::make_unique<EpsilonGreedyPolicy>(spec.parameter);
    return std::make_unique<BoltzmannPolicy>(spec.parameter);
  }
  throw std::invalid_argument("unknown policy type '" + t + "'");
}

namespace {

[[noreturn]] void fail(const std::string& scenario_name, const std::string& message) {
  const std::string prefix = scenario_name.empty() ? "scenario" : "scenario '" + scenario_name + "'";
  throw std::invalid_argument(prefix + ": " + message);
}

void validate_arm(const Scenario& sc, std::size_t index) {
  const ArmSpec& arm = sc.arms[index];
  const std::string where = "arm " + std::to_string(index + 1);
  if (arm.kind == ArmSpec::Kind::kMarkov) {
    if (arm.markov.emissions.size() != arm.markov.transition.size()) {
      fail(sc.name, where + ": one emission per chain state required");
    }
    try {
      stationary_distribution(arm.markov.transition);  // validates rows and margin
    } catch (const std::invalid_argument& e) {
      fail(sc.name, where + ": " + e.what());
    }
    return;
  }
  const ParamSpec& p = arm.primary;
  const ParamSpec& s = arm.secondary;
  auto require_fixed = [&](const ParamSpec& spec, const char* what) {
    if (!spec.is_fixed()) fail(sc.name, where + ": " + what + " cannot be sampled");
  };
  switch (arm.family) {
    case RewardModel::Kind::kBernoulli:
      require_fixed(p, "success probability");
      if (p.value < 0.0 || p.value > 1.0) {
        fail(sc.name, where + ": success probability outside [0, 1]");
      }
      break;
    case RewardModel::Kind::kNormal:
      if (p.draw == ParamSpec::Draw::kInvSqrtExp) {
        fail(sc.name, where + ": mean draw must be fixed or std-normal");
      }
      if (s.draw == ParamSpec::Draw::kStdNormal) {
        fail(sc.name, where + ": deviation draw must be fixed or inv-sqrt-exp");
      }
      if (s.is_fixed() && !(s.value > 0.0)) fail(sc.name, where + ": deviation must be positive");
      break;
    case RewardModel::Kind::kDoubleExponential:
      if (p.draw == ParamSpec::Draw::kInvSqrtExp) {
        fail(sc.name, where + ": location draw must be fixed or std-normal");
      }
      require_fixed(s, "scale");
      if (!(s.value > 0.0)) fail(sc.name, where + ": scale must be positive");
      break;
    case RewardModel::Kind::kTruncatedExponential:
    case RewardModel::Kind::kTruncatedPoisson:
      require_fixed(p, "rate");
      if (!(p.value > 0.0)) fail(sc.name, where + ": rate must be positive");
      break;
    case RewardModel::Kind::kUniform:
      require_fixed(p, "lower endpoint");
      require_fixed(s, "upper endpoint");
      if (!(p.value < s.value)) fail(sc.name, where + ": endpoints must satisfy lo < hi");
      break;
    case RewardModel::Kind::kConstant:
      require_fixed(p, "value");
      break;
  }
}

}  // namespace

void validate_scenario(const Scenario& sc) {
  if (sc.name.empty()) fail(sc.name, "missing name");
  const std::size_t num_arms = sc.arms.size();
  if (num_arms < 2) fail(sc.name, "needs at least two arms");
  if (sc.horizon < static_cast<long long>(num_arms)) {
    fail(sc.name, "horizon must be at least the number of arms");
  }
  if (sc.replications < 1) fail(sc.name, "needs at least one replication");
  if (sc.roster.empty()) fail(sc.name, "needs at least one policy");
  if (sc.bin_edges.size() < 2) fail(sc.name, "needs at least two histogram bin edges");
  for (std::size_t i = 1; i < sc.bin_edges.size(); ++i) {
    if (!(sc.bin_edges[i - 1] < sc.bin_edges[i])) {
      fail(sc.name, "histogram bin edges must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < num_arms; ++i) validate_arm(sc, i);

  std::set<std::string> labels;
  for (const PolicySpec& ps : sc.roster) {
    std::unique_ptr<Policy> policy;
    try {
      policy = make_policy(ps);
    } catch (const std::invalid_argument& e) {
      fail(sc.name, e.what());
    }
    if (ps.warm_start < 1) fail(sc.name, "warm start must be at least 1");
    if (static_cast<long long>(ps.warm_start) * static_cast<long long>(num_arms) > sc.horizon) {
      fail(sc.name, "warm start (" + std::to_string(ps.warm_start) +
                        " per arm) exceeds the horizon");
    }
    const bool bernoulli_only =
        ps.type == "kl-ucb" || ps.type == "kl-ucb-plus" || ps.type == "thompson";
    if (bernoulli_only) {
      for (const ArmSpec& arm : sc.arms) {
        if (arm.kind != ArmSpec::Kind::kIid || arm.family != RewardModel::Kind::kBernoulli ||
            !arm.primary.is_fixed()) {
          fail(sc.name, "policy '" + ps.type + "' requires fixed Bernoulli arms");
        }
      }
    }
    if (!labels.insert(ps.label()).second) {
      fail(sc.name, "duplicate policy label '" + ps.label() + "' in roster");
    }
  }
}

namespace {

// --- declarative scenario text ---

struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct ConfigSection {
  std::string name;
  int line = 0;
  std::vector<ConfigEntry> entries;
};

[[noreturn]] void config_fail(const std::string& origin, int line, const std::string& message) {
  throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + message);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s, const char* separators) {
  std::vector<std::string> out;
  std::string current;
  for (char c : s) {
    if (std::strchr(separators, c) != nullptr) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

double parse_double(const ConfigEntry& e, const std::string& origin) {
  const std::string s = trim(e.value);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    config_fail(origin, e.line, "value of '" + e.key + "' is not a number: '" + e.value + "'");
  }
  return v;
}

long long parse_int(const ConfigEntry& e, const std::string& origin) {
  const std::string s = trim(e.value);
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    config_fail(origin, e.line, "value of '" + e.key + "' is not an integer: '" + e.value + "'");
  }
  return v;
}

std::uint64_t parse_seed(const ConfigEntry& e, const std::string& origin) {
  const std::string s = trim(e.value);
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    config_fail(origin, e.line, "value of '" + e.key + "' is not a seed: '" + e.value + "'");
  }
  return static_cast<std::uint64_t>(v);
}

ParamSpec parse_param(const ConfigEntry& e, const std::string& origin) {
  const std::string s = trim(e.value);
  if (s == "std-normal") return ParamSpec::std_normal();
  if (s == "inv-sqrt-exp") return ParamSpec::inv_sqrt_exp();
  return ParamSpec::fixed(parse_double(e, origin));
}

// Looks up a key, enforcing single use; nullptr when absent.
const ConfigEntry* find_entry(const ConfigSection& sec, const std::string& key,
                              const std::string& origin) {
  const ConfigEntry* found = nullptr;
  for (const ConfigEntry& e : sec.entries) {
    if (e.key != key) continue;
    if (found != nullptr) config_fail(origin, e.line, "duplicate key '" + key + "'");
    found = &e;
  }
  return found;
}

const ConfigEntry& require_entry(const ConfigSection& sec, const std::string& key,
                                 const std::string& origin) {
  const ConfigEntry* found = find_entry(sec, key, origin);
  if (found == nullptr) {
    config_fail(origin, sec.line, "[" + sec.name + "] section is missing key '" + key + "'");
  }
  return *found;
}

void reject_unknown_keys(const ConfigSection& sec, const std::set<std::string>& allowed,
                         const std::string& origin) {
  for (const ConfigEntry& e : sec.entries) {
    if (allowed.count(e.key) == 0) {
      config_fail(origin, e.line, "unknown key '" + e.key + "' in [" + sec.name + "]");
    }
  }
}

ArmSpec parse_arm_section(const ConfigSection& sec, const std::string& origin) {
  const ConfigEntry& family = require_entry(sec, "family", origin);
  const std::string f = trim(family.value);
  if (f == "bernoulli") {
    reject_unknown_keys(sec, {"family", "p"}, origin);
    return ArmSpec::iid(RewardModel::Kind::kBernoulli,
                        ParamSpec::fixed(parse_double(require_entry(sec, "p", origin), origin)));
  }
  if (f == "normal") {
    reject_unknown_keys(sec, {"family", "mean", "stddev"}, origin);
    return ArmSpec::iid(RewardModel::Kind::kNormal,
                        parse_param(require_entry(sec, "mean", origin), origin),
                        parse_param(require_entry(sec, "stddev", origin), origin));
  }
  if (f == "double-exponential") {
    reject_unknown_keys(sec, {"family", "location", "scale"}, origin);
    return ArmSpec::iid(
        RewardModel::Kind::kDoubleExponential,
        parse_param(require_entry(sec, "location", origin), origin),
        ParamSpec::fixed(parse_double(require_entry(sec, "scale", origin), origin)));
  }
  if (f == "truncated-exponential" || f == "truncated-poisson") {
    reject_unknown_keys(sec, {"family", "rate"}, origin);
    const auto kind = f == "truncated-exponential" ? RewardModel::Kind::kTruncatedExponential
                                                   : RewardModel::Kind::kTruncatedPoisson;
    return ArmSpec::iid(kind,
                        ParamSpec::fixed(parse_double(require_entry(sec, "rate", origin), origin)));
  }
  if (f == "uniform") {
    reject_unknown_keys(sec, {"family", "lo", "hi"}, origin);
    return ArmSpec::iid(RewardModel::Kind::kUniform,
                        ParamSpec::fixed(parse_double(require_entry(sec, "lo", origin), origin)),
                        ParamSpec::fixed(parse_double(require_entry(sec, "hi", origin), origin)));
  }
  if (f == "constant") {
    reject_unknown_keys(sec, {"family", "value"}, origin);
    return ArmSpec::iid(RewardModel::Kind::kConstant,
                        ParamSpec::fixed(parse_double(require_entry(sec, "value", origin), origin)));
  }
  if (f == "markov") {
    reject_unknown_keys(sec, {"family", "transition", "values"}, origin);
    const ConfigEntry& tr = require_entry(sec, "transition", origin);
    MarkovRewardModel model;
    for (const std::string& row_text : split_list(tr.value, ";")) {
      std::vector<double> row;
      for (const std::string& token : split_list(row_text, ", \t")) {
        ConfigEntry cell{tr.key, token, tr.line};
        row.push_back(parse_double(cell, origin));
      }
      if (!row.empty()) model.transition.push_back(std::move(row));
    }
    const ConfigEntry& values = require_entry(sec, "values", origin);
    for (const std::string& token : split_list(values.value, ", \t")) {
      ConfigEntry cell{values.key, token, values.line};
      model.emissions.push_back(RewardModel::constant(parse_double(cell, origin)));
    }
    return ArmSpec::markov_arm(std::move(model));
  }
  config_fail(origin, family.line, "unknown arm family '" + f + "'");
}

PolicySpec parse_policy_section(const ConfigSection& sec, const std::string& origin) {
  reject_unknown_keys(sec, {"type", "parameter", "warm-start"}, origin);
  PolicySpec spec;
  spec.type = trim(require_entry(sec, "type", origin).value);
  if (const ConfigEntry* e = find_entry(sec, "parameter", origin)) {
    spec.parameter = parse_double(*e, origin);
  }
  if (const ConfigEntry* e = find_entry(sec, "warm-start", origin)) {
    const long long w = parse_int(*e, origin);
    if (w < 1 || w > 1000000) config_fail(origin, e->line, "warm-start out of range");
    spec.warm_start = static_cast<int>(w);
  }
  return spec;
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
  std::vector<ConfigSection> sections;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') config_fail(origin, lineno, "malformed section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name != "scenario" && name != "arm" && name != "policy") {
        config_fail(origin, lineno, "unknown section [" + name + "]");
      }
      sections.push_back(ConfigSection{name, lineno, {}});
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) config_fail(origin, lineno, "expected 'key = value'");
    ConfigEntry entry{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno};
    if (entry.key.empty()) config_fail(origin, lineno, "empty key");
    if (sections.empty()) config_fail(origin, lineno, "key appears before any section");
    sections.back().entries.push_back(std::move(entry));
  }

  Scenario sc;
  bool saw_scenario = false;
  for (const ConfigSection& sec : sections) {
    if (sec.name == "scenario") {
      if (saw_scenario) config_fail(origin, sec.line, "duplicate [scenario] section");
      saw_scenario = true;
      reject_unknown_keys(
          sec, {"name", "description", "horizon", "replications", "seed", "bins"}, origin);
      sc.name = trim(require_entry(sec, "name", origin).value);
      if (const ConfigEntry* e = find_entry(sec, "description", origin)) sc.description = e->value;
      if (const ConfigEntry* e = find_entry(sec, "horizon", origin)) sc.horizon = parse_int(*e, origin);
      if (const ConfigEntry* e = find_entry(sec, "replications", origin)) {
        const long long j = parse_int(*e, origin);
        if (j < 1 || j > 100000000) config_fail(origin, e->line, "replications out of range");
        sc.replications = static_cast<int>(j);
      }
      if (const ConfigEntry* e = find_entry(sec, "seed", origin)) {
        sc.master_seed = parse_seed(*e, origin);
      }
      if (const ConfigEntry* e = find_entry(sec, "bins", origin)) {
        sc.bin_edges.clear();
        for (const std::string& token : split_list(e->value, ", \t")) {
          ConfigEntry cell{e->key, token, e->line};
          sc.bin_edges.push_back(parse_double(cell, origin));
        }
      }
    } else if (sec.name == "arm") {
      sc.arms.push_back(parse_arm_section(sec, origin));
    } else {
      sc.roster.push_back(parse_policy_section(sec, origin));
    }
  }
  if (!saw_scenario) {
    throw std::invalid_argument(origin + ": missing [scenario] section");
  }
  try {
    validate_scenario(sc);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(origin + ": " + e.what());
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str(), path);
}

}  // namespace banditlab
