#include "dynmpc/metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dynmpc {

double comm_entropy(const std::map<PairKey, long long>& totals) {
  long long total = 0;
  for (const auto& [pair, words] : totals) total += words;
  if (total <= 0) throw std::domain_error("NoCommunication: entropy undefined");
  double h = 0.0;
  for (const auto& [pair, words] : totals) {
    if (words <= 0) continue;
    double p = static_cast<double>(words) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

double comm_entropy(std::span<const RoundMetrics> window) {
  if (window.empty()) throw std::domain_error("NoCommunication: empty window");
  std::map<PairKey, long long> totals;
  for (const auto& r : window)
    for (const auto& [pair, words] : r.per_pair_words) totals[pair] += words;
  return comm_entropy(totals);
}

std::string MetricsWriter::header() {
  return "update_idx,op,rounds,active_max,comm_max_round,comm_total,machines_used";
}

std::string MetricsWriter::row(const UpdateMetrics& m) {
  std::ostringstream os;
  os << m.update_index << ',' << m.op << ',' << m.rounds << ','
     << m.max_active_per_round << ',' << m.max_comm_per_round << ','
     << m.total_comm << ',' << m.machines_ever_used;
  return os.str();
}

} // namespace dynmpc
