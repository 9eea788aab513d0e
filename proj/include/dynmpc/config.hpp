#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dynmpc/words.hpp"

namespace dynmpc {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sizing of the simulated cluster. N is the input-size budget in words
// (N = n + m_max for graph workloads); every machine gets S words of store
// and S words of send/receive bandwidth per round.
struct SimConfig {
  long long capacity_n = 0;     // N
  long long machine_memory = 0; // S, words per machine
  long long machine_count = 0;  // mu
  std::uint64_t rng_seed = 1;

  double cs = 8.0; // S = ceil(cs * sqrt(N))
  double cm = 2.0; // mu = ceil(cm * sqrt(N))

  long long n_vertices = 0;
  long long m_max = 0;
  long long weight_scale = 1000;
  double epsilon = 0.1;

  // Fills S and mu from (n, m_max, cs, cm) unless already set explicitly.
  void derive();
  void validate() const;

  long long history_cap() const; // H_max = ceil(sqrt(N))
  long long tau() const;         // heavy/light threshold = ceil(sqrt(2*m_max))
};

// Flat key=value file (one pair per line, '#' comments). Unknown keys are
// an error so typos do not silently run with defaults.
SimConfig load_config_file(const std::string& path);
void apply_config_kv(SimConfig& cfg, const std::string& key, const std::string& value);

} // namespace dynmpc
