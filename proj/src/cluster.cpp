#include "dynmpc/cluster.hpp"

#include <algorithm>

namespace dynmpc {

Cluster::Cluster(SimConfig cfg) : cfg_(cfg) {
  cfg_.derive();
  machines_.reserve(cfg_.machine_count);
  for (long long i = 0; i < cfg_.machine_count; ++i)
    machines_.emplace_back(static_cast<int>(i));
}

int Cluster::add_machine() {
  machines_.emplace_back(machine_count());
  return machine_count() - 1;
}

void Cluster::Ctx::send(int to, Word kind, Words payload) {
  if (payload.empty())
    throw SimFault(SimFault::BadMessage, machine_.id(), "empty payload");
  if (to < 0 || to >= cluster_.machine_count())
    throw SimFault(SimFault::BadMessage, machine_.id(),
                   "bad receiver " + std::to_string(to));
  machine_.outbox.push_back(Envelope{machine_.id(), to, kind, std::move(payload)});
}

RoundMetrics Cluster::run_round(const Step& step) {
  // Machines run in ascending ID order; state is isolated, so any order
  // observationally equivalent to this one is legal.
  for (auto& m : machines_) {
    Ctx ctx(*this, m);
    step(ctx);
  }

  RoundMetrics rm;
  rm.round_index = round_counter_;
  std::map<int, long long> sent, received;
  std::set<int> touched;
  for (auto& m : machines_) {
    for (const auto& e : m.outbox) {
      if (e.sender == e.receiver) continue; // self-note: 0 communication
      long long words = static_cast<long long>(e.payload.size());
      sent[e.sender] += words;
      received[e.receiver] += words;
      rm.messages += 1;
      rm.comm_words += words;
      rm.per_pair_words[{e.sender, e.receiver}] += words;
      touched.insert(e.sender);
      touched.insert(e.receiver);
    }
  }
  for (const auto& [id, words] : sent)
    if (words > cfg_.machine_memory)
      throw SimFault(SimFault::BandwidthExceeded, id,
                     "machine " + std::to_string(id) + " sent " +
                         std::to_string(words) + " words > S=" +
                         std::to_string(cfg_.machine_memory));
  for (const auto& [id, words] : received)
    if (words > cfg_.machine_memory)
      throw SimFault(SimFault::BandwidthExceeded, id,
                     "machine " + std::to_string(id) + " received " +
                         std::to_string(words) + " words > S=" +
                         std::to_string(cfg_.machine_memory));
  rm.active_machines = static_cast<long long>(touched.size());

  // Deliver: inboxes are rebuilt sorted by sender ID (stable, so multiple
  // messages from one sender keep their emission order).
  for (auto& m : machines_) m.inbox.clear();
  for (auto& m : machines_) {
    for (auto& e : m.outbox) machines_[e.receiver].inbox.push_back(std::move(e));
    m.outbox.clear();
  }
  for (auto& m : machines_) {
    std::stable_sort(m.inbox.begin(), m.inbox.end(),
                     [](const Envelope& a, const Envelope& b) { return a.sender < b.sender; });
  }

  check_store_caps();

  ++round_counter_;
  upd_rounds_ += 1;
  upd_max_active_ = std::max(upd_max_active_, rm.active_machines);
  upd_max_comm_ = std::max(upd_max_comm_, rm.comm_words);
  upd_total_comm_ += rm.comm_words;
  upd_machines_.insert(touched.begin(), touched.end());
  for (const auto& [pair, words] : rm.per_pair_words) pair_totals_[pair] += words;
  return rm;
}

void Cluster::check_store_caps() {
  for (const auto& m : machines_) {
    if (static_cast<long long>(m.store_words()) > cfg_.machine_memory)
      throw SimFault(SimFault::MemoryCapExceeded, m.id(),
                     "machine " + std::to_string(m.id()) + " stores " +
                         std::to_string(m.store_words()) + " words > S=" +
                         std::to_string(cfg_.machine_memory));
  }
}

RoundMetrics Cluster::broadcast(int source, Word kind, const Words& payload) {
  if (payload.empty())
    throw SimFault(SimFault::BadMessage, source, "broadcast of empty payload");
  return run_round([&](Ctx& ctx) {
    if (ctx.id() != source) return;
    for (int i = 0; i < machine_count(); ++i)
      if (i != source) ctx.send(i, kind, payload);
  });
}

std::optional<Words> chunk_feed(MachineState& m, Word scratch_key, const Envelope& e) {
  // fragment payload: [index, total, data...]
  Word index = e.payload.at(0);
  Word total = e.payload.at(1);
  std::optional<Words> out;
  m.mutate(scratch_key, [&](Words& buf) {
    buf.insert(buf.end(), e.payload.begin() + 2, e.payload.end());
    if (index + 1 == total) out = buf;
  });
  if (out) m.erase(scratch_key);
  return out;
}

int Cluster::broadcast_apply(int source, Word kind, const Words& payload,
                             const ApplyStep& apply) {
  if (payload.empty())
    throw SimFault(SimFault::BadMessage, source, "broadcast of empty payload");
  const Word scratch = static_cast<Word>(0x7f00000000000000LL) + kind;
  const long long S = cfg_.machine_memory;
  const int mu = machine_count();

  // Fragment so a single message always fits, then fan out over a relay
  // tree whose degree keeps every sender inside its per-round send cap.
  long long frag_cap = std::max<long long>(1, S - 2);
  long long nfrags = (static_cast<long long>(payload.size()) + frag_cap - 1) / frag_cap;
  long long msg_words = std::min<long long>(frag_cap, static_cast<long long>(payload.size())) + 2;
  long long fanout = std::max<long long>(1, S / msg_words);

  // BFS tiers over all machines except the source; children[] gives each
  // relay the slice it forwards to.
  std::vector<std::vector<int>> children(mu);
  int levels = 0;
  {
    std::vector<int> frontier{source};
    int next = 0;
    std::vector<int> order;
    for (int i = 0; i < mu; ++i)
      if (i != source) order.push_back(i);
    while (next < static_cast<int>(order.size())) {
      std::vector<int> tier;
      for (int parent : frontier) {
        for (long long c = 0; c < fanout && next < static_cast<int>(order.size()); ++c) {
          children[parent].push_back(order[next]);
          tier.push_back(order[next]);
          ++next;
        }
        if (next >= static_cast<int>(order.size())) break;
      }
      frontier = tier;
      ++levels;
    }
  }

  const Word done_key = scratch + 0x10000;
  auto feed = [&](Ctx& ctx) {
    for (const auto& e : ctx.inbox()) {
      if (e.kind != kind) continue;
      // relays forward the fragment one round after receiving it
      for (int child : children[ctx.id()]) ctx.send(child, kind, e.payload);
      if (auto full = chunk_feed(ctx.self(), scratch, e)) ctx.self().put(done_key, *full);
    }
  };

  // Fragments are pipelined: the source emits one per round while relays
  // push earlier fragments down the tree.
  long long dist_rounds = mu == 1 ? 0 : nfrags + levels - 1;
  for (long long r = 0; r < dist_rounds; ++r) {
    run_round([&](Ctx& ctx) {
      feed(ctx);
      if (ctx.id() != source || r >= nfrags) return;
      std::size_t lo = static_cast<std::size_t>(r * frag_cap);
      std::size_t hi = std::min(payload.size(), static_cast<std::size_t>((r + 1) * frag_cap));
      Words frag;
      frag.reserve(hi - lo + 2);
      frag.push_back(r);
      frag.push_back(nfrags);
      frag.insert(frag.end(), payload.begin() + lo, payload.begin() + hi);
      for (int child : children[source]) ctx.send(child, kind, frag);
    });
  }
  run_round([&](Ctx& ctx) {
    feed(ctx);
    Words full;
    if (ctx.id() == source) {
      full = payload;
    } else if (const Words* v = ctx.self().get(done_key)) {
      full = *v;
      ctx.self().erase(done_key);
    }
    if (!full.empty()) apply(ctx, full);
  });
  return static_cast<int>(dist_rounds) + 1;
}

void Cluster::begin_update(long long idx, std::string op) {
  update_index_ = idx;
  update_op_ = std::move(op);
  upd_rounds_ = 0;
  upd_max_active_ = 0;
  upd_max_comm_ = 0;
  upd_total_comm_ = 0;
  upd_machines_.clear();
}

UpdateMetrics Cluster::snapshot() {
  UpdateMetrics um;
  um.update_index = update_index_;
  um.op = update_op_;
  um.rounds = upd_rounds_;
  um.max_active_per_round = upd_max_active_;
  um.max_comm_per_round = upd_max_comm_;
  um.total_comm = upd_total_comm_;
  um.machines_ever_used = static_cast<long long>(upd_machines_.size());
  begin_update(-1, "");
  return um;
}

} // namespace dynmpc
