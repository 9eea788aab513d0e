#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dynmpc/words.hpp"

namespace dynmpc {

using PairKey = std::pair<int, int>; // (sender, receiver)

struct RoundMetrics {
  long long round_index = 0;
  long long active_machines = 0;
  long long messages = 0;
  long long comm_words = 0;
  std::map<PairKey, long long> per_pair_words;
};

struct UpdateMetrics {
  long long update_index = 0;
  std::string op;
  long long rounds = 0;
  long long max_active_per_round = 0;
  long long max_comm_per_round = 0;
  long long total_comm = 0;
  long long machines_ever_used = 0;
};

// Shannon entropy in bits of the per-(sender,receiver) communication
// distribution summed over the window. Zero entries are skipped.
// Throws NoCommunication (std::domain_error) if the window carries no words.
double comm_entropy(std::span<const RoundMetrics> window);
double comm_entropy(const std::map<PairKey, long long>& totals);

// CSV with the stable schema
//   update_idx,op,rounds,active_max,comm_max_round,comm_total,machines_used
class MetricsWriter {
public:
  static std::string header();
  static std::string row(const UpdateMetrics& m);
};

} // namespace dynmpc
