#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dynmpc/cluster.hpp"
#include "dynmpc/metrics.hpp"
#include "dynmpc/sort.hpp"
#include "dynmpc/rng.hpp"

using namespace dynmpc;

namespace {

SimConfig tiny_config(long long n_machines, long long mem) {
  SimConfig cfg;
  cfg.capacity_n = n_machines * mem / 2;
  cfg.machine_memory = mem;
  cfg.machine_count = n_machines;
  return cfg;
}

} // namespace

TEST_CASE("round metrics: one 3-word message activates both endpoints") {
  Cluster c(tiny_config(4, 64));
  auto rm = c.run_round([](Cluster::Ctx& ctx) {
    if (ctx.id() == 1) ctx.send(2, kGeneric, {7, 8, 9});
  });
  CHECK(rm.active_machines == 2);
  CHECK(rm.messages == 1);
  CHECK(rm.comm_words == 3);
}

TEST_CASE("empty round") {
  Cluster c(tiny_config(4, 64));
  auto rm = c.run_round([](Cluster::Ctx&) {});
  CHECK(rm.active_machines == 0);
  CHECK(rm.messages == 0);
  CHECK(rm.comm_words == 0);
}

TEST_CASE("broadcast activates all machines and counts (mu-1) deliveries") {
  Cluster c(tiny_config(32, 1024));
  auto rm = c.broadcast(0, kBroadcast, {1, 2, 3, 4, 5});
  CHECK(rm.active_machines == 32);
  CHECK(rm.comm_words == 5 * 31);
  // every other machine sees the payload next round
  int seen = 0;
  c.run_round([&](Cluster::Ctx& ctx) {
    for (const auto& e : ctx.inbox())
      if (e.kind == kBroadcast && e.payload == Words{1, 2, 3, 4, 5}) ++seen;
  });
  CHECK(seen == 31);
}

TEST_CASE("broadcast bandwidth accounting at mu=64 S=1024") {
  Cluster c(tiny_config(64, 1024));
  auto rm = c.broadcast(5, kBroadcast, {1, 2, 3, 4, 5, 6});
  CHECK(rm.comm_words == 6 * 63); // 378
  CHECK_THROWS_AS(c.broadcast(5, kBroadcast, Words(20, 1)), SimFault); // 20*63 > 1024
  CHECK_THROWS_AS(c.broadcast(5, kBroadcast, Words{}), SimFault);      // empty payload
}

TEST_CASE("send cap enforced with offending machine id") {
  Cluster c(tiny_config(4, 16));
  try {
    c.run_round([](Cluster::Ctx& ctx) {
      if (ctx.id() == 3) ctx.send(1, kGeneric, Words(17, 0));
    });
    FAIL("expected fault");
  } catch (const SimFault& f) {
    CHECK(f.kind == SimFault::BandwidthExceeded);
    CHECK(f.machine == 3);
  }
}

TEST_CASE("receive cap enforced") {
  Cluster c(tiny_config(6, 16));
  CHECK_THROWS_AS(c.run_round([](Cluster::Ctx& ctx) {
    if (ctx.id() != 0) ctx.send(0, kGeneric, Words(10, 1)); // 50 words into machine 0
  }),
                  SimFault);
}

TEST_CASE("store cap enforced at round end") {
  Cluster c(tiny_config(4, 16));
  CHECK_THROWS_AS(c.run_round([](Cluster::Ctx& ctx) {
    if (ctx.id() == 2) ctx.self().put(0, Words(17, 1));
  }),
                  SimFault);
}

TEST_CASE("inboxes are sorted by sender id") {
  Cluster c(tiny_config(8, 64));
  c.run_round([](Cluster::Ctx& ctx) {
    // emission in descending machine order still delivers sorted
    if (ctx.id() >= 2) ctx.send(0, kGeneric, {Word(100 - ctx.id())});
  });
  std::vector<int> senders;
  c.run_round([&](Cluster::Ctx& ctx) {
    if (ctx.id() != 0) return;
    for (const auto& e : ctx.inbox()) senders.push_back(e.sender);
  });
  CHECK(std::is_sorted(senders.begin(), senders.end()));
  CHECK(senders.size() == 6);
}

TEST_CASE("self-notes cost nothing") {
  Cluster c(tiny_config(4, 64));
  auto rm = c.run_round([](Cluster::Ctx& ctx) {
    if (ctx.id() == 1) ctx.send(1, kGeneric, {42});
  });
  CHECK(rm.active_machines == 0);
  CHECK(rm.comm_words == 0);
  int got = 0;
  c.run_round([&](Cluster::Ctx& ctx) {
    if (ctx.id() == 1 && !ctx.inbox().empty()) got = 1;
  });
  CHECK(got == 1);
}

TEST_CASE("update metrics aggregation") {
  Cluster c(tiny_config(8, 64));
  c.begin_update(0, "+");
  c.run_round([](Cluster::Ctx& ctx) {
    if (ctx.id() == 0) { ctx.send(1, kGeneric, {1, 1, 1, 1, 1}); ctx.send(2, kGeneric, {1, 1, 1, 1, 1}); }
  });
  c.run_round([](Cluster::Ctx& ctx) {
    if (ctx.id() == 1) ctx.send(0, kGeneric, Words(40, 1));
  });
  c.run_round([](Cluster::Ctx& ctx) {
    if (ctx.id() == 2) ctx.send(0, kGeneric, Words(10, 1));
  });
  auto um = c.snapshot();
  CHECK(um.rounds == 3);
  CHECK(um.max_active_per_round == 3);
  CHECK(um.max_comm_per_round == 40);
  CHECK(um.total_comm == 60);
  CHECK(um.machines_ever_used == 3);
}

TEST_CASE("snapshot of an empty update") {
  Cluster c(tiny_config(4, 64));
  c.begin_update(7, "?");
  auto um = c.snapshot();
  CHECK(um.rounds == 0);
  CHECK(um.total_comm == 0);
}

TEST_CASE("comm entropy") {
  RoundMetrics r;
  SUBCASE("point mass is zero") {
    r.per_pair_words[{0, 1}] = 17;
    CHECK(comm_entropy({&r, 1}) == doctest::Approx(0.0));
  }
  SUBCASE("uniform over 4 pairs is 2 bits") {
    r.per_pair_words[{0, 1}] = 5;
    r.per_pair_words[{0, 2}] = 5;
    r.per_pair_words[{1, 3}] = 5;
    r.per_pair_words[{2, 3}] = 5;
    CHECK(comm_entropy({&r, 1}) == doctest::Approx(2.0));
  }
  SUBCASE("(3,1) split") {
    r.per_pair_words[{0, 1}] = 3;
    r.per_pair_words[{2, 3}] = 1;
    double expect = -0.75 * std::log2(0.75) - 0.25 * std::log2(0.25);
    CHECK(comm_entropy({&r, 1}) == doctest::Approx(expect).epsilon(1e-9));
  }
  SUBCASE("no communication throws") {
    CHECK_THROWS_AS(comm_entropy({&r, 1}), std::domain_error);
  }
}

TEST_CASE("chunked broadcast reassembles oversized payloads") {
  Cluster c(tiny_config(16, 32)); // cap per chunk: 32/15 - 2 = 0 -> 1 word chunks
  Words payload;
  for (Word i = 0; i < 9; ++i) payload.push_back(i * 3);
  std::vector<Words> got(16);
  int rounds = c.broadcast_apply(2, kTourDescriptor, payload,
                                 [&](Cluster::Ctx& ctx, const Words& full) {
                                   got[ctx.id()] = full;
                                 });
  CHECK(rounds >= 2);
  for (int i = 0; i < 16; ++i) CHECK(got[i] == payload);
}

TEST_CASE("delivery order independence: permuted emission, same inboxes") {
  // two runs emitting in different per-machine order end up with identical
  // post-round inbox contents because delivery sorts by sender
  auto run = [](bool flip) {
    Cluster c(tiny_config(6, 64));
    c.run_round([&](Cluster::Ctx& ctx) {
      if (ctx.id() != 4 && ctx.id() != 5) return;
      // machines 4 and 5 both message 0..2; emission order differs per run
      std::vector<int> dests{0, 1, 2};
      if (flip) std::reverse(dests.begin(), dests.end());
      for (int d : dests) ctx.send(d, kGeneric, {Word(ctx.id() * 10 + d)});
    });
    std::vector<Words> inboxes;
    c.run_round([&](Cluster::Ctx& ctx) {
      Words flat;
      for (const auto& e : ctx.inbox()) {
        flat.push_back(e.sender);
        flat.insert(flat.end(), e.payload.begin(), e.payload.end());
      }
      inboxes.push_back(flat);
    });
    return inboxes;
  };
  CHECK(run(false) == run(true));
}

TEST_CASE("distributed sort: small gather path matches example") {
  SimConfig cfg;
  cfg.capacity_n = 8;
  cfg.machine_memory = 4;
  cfg.machine_count = 8;
  Cluster c(cfg);
  c.machine(1).put(100, {5, 1});
  c.machine(2).put(100, {9, 3});
  auto res = distributed_sort(c, 0, {1, 2}, 100, {5, 6, 7}, 200, 1);
  REQUIRE(res.order.size() == 2);
  CHECK(*c.machine(res.order[0]).get(200) == Words{1, 3});
  CHECK(*c.machine(res.order[1]).get(200) == Words{5, 9});
  CHECK(res.rounds <= 6);
}

TEST_CASE("distributed sort: already sorted input is stable and fixed-cost") {
  SimConfig cfg;
  cfg.capacity_n = 8;
  cfg.machine_memory = 4;
  cfg.machine_count = 8;
  Cluster c(cfg);
  c.machine(1).put(100, {1, 3});
  c.machine(2).put(100, {5, 9});
  auto r1 = distributed_sort(c, 0, {1, 2}, 100, {5, 6, 7}, 200, 1);
  CHECK(*c.machine(r1.order[0]).get(200) == Words{1, 3});
  CHECK(*c.machine(r1.order[1]).get(200) == Words{5, 9});
  c.machine(1).put(100, {1, 3});
  c.machine(2).put(100, {5, 9});
  auto r2 = distributed_sort(c, 0, {1, 2}, 100, {3, 4, 5}, 300, 1);
  CHECK(r2.rounds == r1.rounds);
  CHECK(*c.machine(r2.order[0]).get(300) == Words{1, 3});
}

TEST_CASE("distributed sort: 10k random 2-word keys vs sequential oracle") {
  SimConfig cfg;
  cfg.n_vertices = 10000;
  cfg.m_max = 10000;
  cfg.derive();
  Cluster c(cfg);
  REQUIRE(c.machine_count() >= 129);
  Rng rng(42);
  std::vector<std::pair<Word, Word>> keys;
  for (int i = 0; i < 10000; ++i)
    keys.push_back({Word(rng.below(1 << 20)), Word(rng.below(1 << 20))});
  // spread over 128 holder machines, coordinator stays machine 0
  std::vector<int> holders;
  for (int h = 0; h < 128; ++h) holders.push_back(1 + h);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    int h = holders[i % holders.size()];
    c.machine(h).mutate(500, [&](Words& v) {
      v.push_back(keys[i].first);
      v.push_back(keys[i].second);
    });
  }
  std::vector<int> pool = holders;
  auto res = distributed_sort(c, 0, holders, 500, pool, 600, 2);
  CHECK(res.rounds <= 6);
  std::sort(keys.begin(), keys.end());
  std::vector<std::pair<Word, Word>> got;
  for (std::size_t j = 0; j < res.order.size(); ++j) {
    const Words* blk = c.machine(res.order[j]).get(600);
    REQUIRE(blk != nullptr);
    for (std::size_t i = 0; i + 1 < blk->size(); i += 2)
      got.push_back({(*blk)[i], (*blk)[i + 1]});
  }
  CHECK(got == keys);
}

TEST_CASE("determinism: identical runs produce identical metrics") {
  auto run = [] {
    Cluster c(tiny_config(8, 64));
    Rng rng(99);
    std::vector<long long> words;
    for (int r = 0; r < 20; ++r) {
      auto rm = c.run_round([&](Cluster::Ctx& ctx) {
        if (ctx.id() == 0) ctx.send(1 + int(ctx.id() + r) % 7, kGeneric, {Word(r)});
      });
      words.push_back(rm.comm_words * 1000 + rm.active_machines);
    }
    return words;
  };
  CHECK(run() == run());
}
