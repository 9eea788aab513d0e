#pragma once

#include <vector>

#include "dynmpc/cluster.hpp"

namespace dynmpc {

struct SortResult {
  std::vector<int> order;          // target machines, block i precedes block i+1
  std::vector<long long> counts;   // tuples per target
  int rounds = 0;
};

// Sample sort of fixed-width word tuples. Input tuples live flattened in
// store[in_key] of each holder; afterwards each target in `order` holds a
// locally sorted block in store[out_key] and the blocks are globally
// ordered. Runs in at most 6 simulated rounds (3 when everything fits in
// one gather). Targets are drawn from target_pool in order; a target may
// also be a holder.
SortResult distributed_sort(Cluster& cluster, int coordinator,
                            const std::vector<int>& holders, Word in_key,
                            const std::vector<int>& target_pool, Word out_key,
                            int key_width);

} // namespace dynmpc
