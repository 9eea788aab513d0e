#pragma once

#include <cstdint>
#include <vector>

namespace dynmpc {

// One machine word. A word holds exactly one vertex ID, tour index,
// fixed-point weight, or machine ID; all memory and bandwidth accounting
// is in words.
using Word = std::int64_t;

using Words = std::vector<Word>;

constexpr Word kNone = -1;

} // namespace dynmpc
