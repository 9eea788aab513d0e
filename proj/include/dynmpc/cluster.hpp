#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynmpc/config.hpp"
#include "dynmpc/machine.hpp"
#include "dynmpc/message.hpp"
#include "dynmpc/metrics.hpp"

namespace dynmpc {

// Simulator faults. The memory and bandwidth caps are hard: hitting one
// aborts the run with the offending machine ID.
struct SimFault : std::runtime_error {
  enum Kind { MemoryCapExceeded, BandwidthExceeded, BadMessage, Diagnostic };
  SimFault(Kind k, int machine, const std::string& what)
      : std::runtime_error(what), kind(k), machine(machine) {}
  Kind kind;
  int machine;
};

// The synchronous substrate: a pool of machines exchanging messages in
// rounds. One round = every machine runs the step against its inbox and
// store, then all outboxes are validated against the send/receive caps and
// delivered (sorted by sender ID) for the next round.
class Cluster {
public:
  explicit Cluster(SimConfig cfg);

  class Ctx {
  public:
    Ctx(Cluster& c, MachineState& m) : cluster_(c), machine_(m) {}
    int id() const { return machine_.id(); }
    MachineState& self() { return machine_; }
    const std::vector<Envelope>& inbox() const { return machine_.inbox; }
    void send(int to, Word kind, Words payload);
    int machine_count() const { return cluster_.machine_count(); }

  private:
    Cluster& cluster_;
    MachineState& machine_;
  };

  using Step = std::function<void(Ctx&)>;
  using ApplyStep = std::function<void(Ctx&, const Words&)>;

  RoundMetrics run_round(const Step& step);

  // One-round broadcast of payload from source to every other machine.
  // BandwidthExceeded if |payload| * (mu - 1) exceeds the send cap.
  RoundMetrics broadcast(int source, Word kind, const Words& payload);

  // Broadcast of a payload that may exceed the one-round cap: the payload
  // travels in as many rounds as needed and `apply` runs on every machine
  // in one final round with the assembled payload. Returns rounds used.
  int broadcast_apply(int source, Word kind, const Words& payload, const ApplyStep& apply);

  int machine_count() const { return static_cast<int>(machines_.size()); }
  int add_machine();
  MachineState& machine(int id) { return machines_.at(id); }
  const MachineState& machine(int id) const { return machines_.at(id); }

  const SimConfig& config() const { return cfg_; }
  long long mem_cap() const { return cfg_.machine_memory; }

  void begin_update(long long idx, std::string op);
  UpdateMetrics snapshot();

  long long rounds_total() const { return round_counter_; }
  const std::map<PairKey, long long>& pair_totals() const { return pair_totals_; }
  void reset_pair_totals() { pair_totals_.clear(); }

private:
  void check_store_caps();

  SimConfig cfg_;
  std::vector<MachineState> machines_;
  long long round_counter_ = 0;

  // current update accumulator
  long long update_index_ = -1;
  std::string update_op_;
  long long upd_rounds_ = 0;
  long long upd_max_active_ = 0;
  long long upd_max_comm_ = 0;
  long long upd_total_comm_ = 0;
  std::set<int> upd_machines_;

  std::map<PairKey, long long> pair_totals_;
};

// Receiver-side reassembly of a multi-round payload. Fragments are held in
// the machine's store under `scratch_key`; returns the full payload once
// the last fragment arrived.
std::optional<Words> chunk_feed(MachineState& m, Word scratch_key, const Envelope& e);

} // namespace dynmpc
