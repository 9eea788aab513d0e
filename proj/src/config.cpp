#include "dynmpc/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace dynmpc {

void SimConfig::derive() {
  if (capacity_n <= 0) capacity_n = n_vertices + m_max;
  if (capacity_n <= 0) throw ConfigError("capacity N must be positive");
  double root = std::sqrt(static_cast<double>(capacity_n));
  if (machine_memory <= 0)
    machine_memory = static_cast<long long>(std::ceil(cs * root));
  if (machine_count <= 0)
    machine_count = static_cast<long long>(std::ceil(cm * root));
  validate();
}

void SimConfig::validate() const {
  if (cs < 1.0) throw ConfigError("cs must be >= 1");
  double root = std::sqrt(static_cast<double>(capacity_n));
  if (machine_memory < static_cast<long long>(std::ceil(1.0 * root)))
    throw ConfigError("machine memory S below sqrt(N)");
  if (machine_memory * machine_count < capacity_n)
    throw ConfigError("S * mu below capacity N: cluster cannot hold the input");
}

long long SimConfig::history_cap() const {
  return static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(capacity_n))));
}

long long SimConfig::tau() const {
  return static_cast<long long>(std::ceil(std::sqrt(2.0 * static_cast<double>(m_max))));
}

void apply_config_kv(SimConfig& cfg, const std::string& key, const std::string& value) {
  try {
    if (key == "n") cfg.n_vertices = std::stoll(value);
    else if (key == "m_max") cfg.m_max = std::stoll(value);
    else if (key == "capacity_n") cfg.capacity_n = std::stoll(value);
    else if (key == "machine_memory") cfg.machine_memory = std::stoll(value);
    else if (key == "machine_count") cfg.machine_count = std::stoll(value);
    else if (key == "seed") cfg.rng_seed = std::stoull(value);
    else if (key == "cs") cfg.cs = std::stod(value);
    else if (key == "cm") cfg.cm = std::stod(value);
    else if (key == "epsilon") cfg.epsilon = std::stod(value);
    else if (key == "weight_scale") cfg.weight_scale = std::stoll(value);
    else throw ConfigError("unknown config key: " + key);
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad value for config key " + key + ": " + value);
  } catch (const std::out_of_range&) {
    throw ConfigError("value out of range for config key " + key + ": " + value);
  }
}

SimConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  SimConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    if (trimmed.empty()) continue;
    auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_config_kv(cfg, trimmed.substr(0, eq), trimmed.substr(eq + 1));
  }
  return cfg;
}

} // namespace dynmpc
