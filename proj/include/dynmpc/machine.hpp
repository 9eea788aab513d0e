#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "dynmpc/message.hpp"
#include "dynmpc/words.hpp"

namespace dynmpc {

// One simulated machine: a word-addressable key/value store plus the
// inbox/outbox of the current round. Store accounting counts value words;
// keys are addresses and free, like addresses in a RAM model.
class MachineState {
public:
  explicit MachineState(int id) : id_(id) {}

  int id() const { return id_; }
  std::size_t store_words() const { return words_; }

  bool has(Word key) const { return store_.count(key) != 0; }

  const Words* get(Word key) const {
    auto it = store_.find(key);
    return it == store_.end() ? nullptr : &it->second;
  }

  void put(Word key, Words value) {
    auto& slot = store_[key];
    words_ -= slot.size();
    slot = std::move(value);
    words_ += slot.size();
  }

  void erase(Word key) {
    auto it = store_.find(key);
    if (it == store_.end()) return;
    words_ -= it->second.size();
    store_.erase(it);
  }

  // Mutable access with word accounting kept consistent.
  template <class F>
  auto mutate(Word key, F&& f) {
    auto& slot = store_[key];
    struct Guard {
      MachineState* m;
      Words* v;
      std::size_t before;
      ~Guard() { m->words_ += v->size() - before; }
    } guard{this, &slot, slot.size()};
    return f(slot);
  }

  const std::map<Word, Words>& entries() const { return store_; }

  std::vector<Envelope> inbox;
  std::vector<Envelope> outbox;

private:
  int id_;
  std::map<Word, Words> store_;
  std::size_t words_ = 0;
};

} // namespace dynmpc
