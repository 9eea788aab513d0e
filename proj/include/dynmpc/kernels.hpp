#pragma once

#include <span>

#include "dynmpc/words.hpp"

namespace dynmpc::kern {

// Bulk transforms over arrays of Euler-tour indexes. Entries <= 0 are
// "no index" sentinels and are left untouched. The masked (_where)
// variants operate on parallel (value, comp) arrays and only touch
// entries whose comp equals `comp_match`.
//
// rotate_shift:  x -> ((x - pivot) mod len) + 1 + post   (tour rotation)
// shift_above:   x >  pivot           -> x += delta
// cut:           f < x < l            -> x -= f;   x > l -> x -= tail_delta
// subst2:        x == a -> ra;  x == b -> rb   (dropped-entry repair)
// relabel:       comp == from -> to
struct KernelOps {
  void (*rotate_shift)(std::span<Word>, Word pivot, Word len, Word post);
  void (*shift_above)(std::span<Word>, Word pivot, Word delta);
  void (*cut)(std::span<Word>, Word f, Word l, Word tail_delta);
  void (*subst2)(std::span<Word>, Word a, Word ra, Word b, Word rb);

  void (*rotate_shift_where)(std::span<Word>, std::span<const Word> comp, Word comp_match,
                             Word pivot, Word len, Word post);
  void (*shift_above_where)(std::span<Word>, std::span<const Word> comp, Word comp_match,
                            Word pivot, Word delta);
  // cut over (idx, comp) pairs; entries moved into the interior are
  // relabeled comp_match -> comp_new.
  void (*cut_where)(std::span<Word>, std::span<Word> comp, Word comp_match,
                    Word f, Word l, Word tail_delta, Word comp_new);
  void (*subst2_where)(std::span<Word>, std::span<const Word> comp, Word comp_match,
                       Word a, Word ra, Word b, Word rb);
  void (*relabel)(std::span<Word> comp, Word from, Word to);
};

extern const KernelOps scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelOps avx2_ops;
#endif

// Active table, selected at runtime (AVX2 when the CPU has it, scalar
// otherwise; DYNMPC_FORCE_SCALAR=1 or force_scalar(true) pins scalar).
const KernelOps& ops();
const char* backend_name();
void force_scalar(bool on);

} // namespace dynmpc::kern
