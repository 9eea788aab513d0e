#include "dynmpc/sort.hpp"

#include <algorithm>
#include <cassert>

namespace dynmpc {
namespace {

// lexicographic order on width-word tuples stored flat
struct TupleLess {
  int width;
  bool operator()(const Word* a, const Word* b) const {
    for (int i = 0; i < width; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

void sort_flat(Words& flat, int width) {
  if (flat.empty()) return;
  std::size_t n = flat.size() / width;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  TupleLess less{width};
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return less(&flat[a * width], &flat[b * width]);
  });
  Words out(flat.size());
  for (std::size_t i = 0; i < n; ++i)
    std::copy_n(&flat[idx[i] * width], width, &out[i * width]);
  flat = std::move(out);
}

} // namespace

SortResult distributed_sort(Cluster& cluster, int coordinator,
                            const std::vector<int>& holders, Word in_key,
                            const std::vector<int>& target_pool, Word out_key,
                            int key_width) {
  const long long S = cluster.mem_cap();
  const int width = key_width;

  long long total_words = 0;
  for (int h : holders) {
    if (const Words* v = cluster.machine(h).get(in_key)) total_words += static_cast<long long>(v->size());
  }
  long long total_keys = total_words / std::max(1, width);

  SortResult res;

  long long block_cap_words = std::max<long long>(width, S / 2);
  int q = static_cast<int>(std::max<long long>(
      1, (total_words + block_cap_words - 1) / block_cap_words));
  if (q > static_cast<int>(target_pool.size()))
    throw SimFault(SimFault::Diagnostic, coordinator, "sort: target pool too small");
  std::vector<int> targets(target_pool.begin(), target_pool.begin() + q);
  res.order = targets;
  res.counts.assign(q, 0);

  const bool small = total_words <= S;

  if (small) {
    // Everything fits on the coordinator: gather, sort, split evenly.
    cluster.run_round([&](Cluster::Ctx& ctx) {
      if (std::find(holders.begin(), holders.end(), ctx.id()) == holders.end()) return;
      const Words* v = ctx.self().get(in_key);
      if (!v || v->empty()) return;
      Words payload = *v;
      ctx.self().erase(in_key);
      ctx.send(coordinator, kSortSample, std::move(payload));
    });
    cluster.run_round([&](Cluster::Ctx& ctx) {
      if (ctx.id() != coordinator) return;
      Words all;
      for (const auto& e : ctx.inbox())
        if (e.kind == kSortSample) all.insert(all.end(), e.payload.begin(), e.payload.end());
      sort_flat(all, width);
      long long keys = static_cast<long long>(all.size()) / width;
      for (int j = 0; j < q; ++j) {
        long long lo = keys * j / q, hi = keys * (j + 1) / q;
        if (lo == hi) continue;
        Words run(all.begin() + lo * width, all.begin() + hi * width);
        ctx.send(targets[j], kSortScatter, std::move(run));
      }
    });
    cluster.run_round([&](Cluster::Ctx& ctx) {
      auto it = std::find(targets.begin(), targets.end(), ctx.id());
      if (it == targets.end()) return;
      Words block;
      for (const auto& e : ctx.inbox())
        if (e.kind == kSortScatter) block.insert(block.end(), e.payload.begin(), e.payload.end());
      Word count = static_cast<Word>(block.size()) / width;
      ctx.self().put(out_key, std::move(block));
      ctx.send(coordinator, kSortAck, {count});
    });
    res.rounds = 3;
  } else {
    // Round 1: local sort, evenly spaced samples to the coordinator.
    int nholders = static_cast<int>(holders.size());
    long long s0 = std::max<long long>(1, (S / std::max(1, nholders) - 1) / width);
    s0 = std::min<long long>(s0, 8);
    cluster.run_round([&](Cluster::Ctx& ctx) {
      auto hit = std::find(holders.begin(), holders.end(), ctx.id());
      if (hit == holders.end()) return;
      // stratified regular sampling: holder h covers percentile offsets
      // (i*H + h)/(take*H) so the pooled samples tile [0,1) evenly even
      // when each holder contributes only a few samples
      long long h = hit - holders.begin();
      const Words* v = ctx.self().get(in_key);
      long long local = v ? static_cast<long long>(v->size()) / width : 0;
      Words msg{local};
      if (local > 0) {
        ctx.self().mutate(in_key, [&](Words& flat) { sort_flat(flat, width); });
        const Words& flat = *ctx.self().get(in_key);
        long long take = std::min(s0, local);
        for (long long i = 0; i < take; ++i) {
          long long pos = local * (i * nholders + h) / (take * nholders);
          msg.insert(msg.end(), flat.begin() + pos * width, flat.begin() + (pos + 1) * width);
        }
      }
      ctx.send(coordinator, kSortSample, std::move(msg));
    });

    // Coordinator picks q-1 splitters from the pooled samples.
    Words samples;
    {
      const auto& inbox = cluster.machine(coordinator).inbox;
      for (const auto& e : inbox)
        if (e.kind == kSortSample)
          samples.insert(samples.end(), e.payload.begin() + 1, e.payload.end());
    }
    sort_flat(samples, width);
    long long nsamp = static_cast<long long>(samples.size()) / width;
    Words splitmsg{q};
    for (int j : targets) splitmsg.push_back(j);
    for (int j = 1; j < q; ++j) {
      long long pos = std::min(nsamp - 1, nsamp * j / q);
      if (pos < 0) pos = 0;
      splitmsg.insert(splitmsg.end(), samples.begin() + pos * width,
                      samples.begin() + (pos + 1) * width);
    }

    // Splitters and target list fan out to every machine; holders scatter
    // their runs as soon as the full splitter vector lands.
    TupleLess less{width};
    int bc_rounds = cluster.broadcast_apply(coordinator, kSortSplitters, splitmsg,
        [&](Cluster::Ctx& ctx, const Words& split) {
      if (std::find(holders.begin(), holders.end(), ctx.id()) == holders.end()) return;
      const Words* v = ctx.self().get(in_key);
      if (!v) return;
      const Words flat = *v;
      ctx.self().erase(in_key);
      long long local = static_cast<long long>(flat.size()) / width;
      const Word* splitters = split.data() + 1 + q;
      std::vector<Words> runs(q);
      for (long long i = 0; i < local; ++i) {
        const Word* key = &flat[i * width];
        int j = 0;
        while (j < q - 1 && !less(key, splitters + j * width)) ++j;
        runs[j].insert(runs[j].end(), key, key + width);
      }
      for (int j = 0; j < q; ++j) {
        if (runs[j].empty()) continue;
        if (targets[j] == ctx.id()) {
          Words mine = std::move(runs[j]);
          ctx.self().mutate(out_key, [&](Words& blk) {
            blk.insert(blk.end(), mine.begin(), mine.end());
          });
        } else {
          ctx.send(targets[j], kSortScatter, std::move(runs[j]));
        }
      }
    });

    // Round 5: targets merge their runs and acknowledge.
    cluster.run_round([&](Cluster::Ctx& ctx) {
      auto it = std::find(targets.begin(), targets.end(), ctx.id());
      if (it == targets.end()) return;
      ctx.self().mutate(out_key, [&](Words& blk) {
        for (const auto& e : ctx.inbox())
          if (e.kind == kSortScatter) blk.insert(blk.end(), e.payload.begin(), e.payload.end());
        sort_flat(blk, width);
      });
      Word count = static_cast<Word>(ctx.self().get(out_key)->size()) / width;
      ctx.send(coordinator, kSortAck, {count});
    });
    res.rounds = 1 + bc_rounds + 1;
  }

  // The acks sit in the coordinator's inbox after the final round.
  for (const auto& e : cluster.machine(coordinator).inbox) {
    if (e.kind != kSortAck) continue;
    for (int j = 0; j < q; ++j)
      if (targets[j] == e.sender) res.counts[j] = e.payload[0];
  }
  long long got = 0;
  for (long long c : res.counts) got += c;
  if (got != total_keys)
    throw SimFault(SimFault::Diagnostic, coordinator, "sort: key count mismatch");
  return res;
}

} // namespace dynmpc
