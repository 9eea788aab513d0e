#include "dynmpc/kernels.hpp"

namespace dynmpc::kern {
namespace {

inline Word rot1(Word x, Word pivot, Word len, Word post) {
  Word d = x - pivot;
  if (d < 0) d += len;
  return d + 1 + post;
}

void s_rotate_shift(std::span<Word> v, Word pivot, Word len, Word post) {
  for (auto& x : v)
    if (x > 0) x = rot1(x, pivot, len, post);
}

void s_shift_above(std::span<Word> v, Word pivot, Word delta) {
  for (auto& x : v)
    if (x > pivot) x += delta;
}

void s_cut(std::span<Word> v, Word f, Word l, Word tail_delta) {
  for (auto& x : v) {
    if (x <= 0) continue;
    if (x > l) x -= tail_delta;
    else if (x > f) x -= f;
  }
}

void s_subst2(std::span<Word> v, Word a, Word ra, Word b, Word rb) {
  for (auto& x : v) {
    if (x == a) x = ra;
    else if (x == b) x = rb;
  }
}

void s_rotate_shift_where(std::span<Word> v, std::span<const Word> comp, Word c,
                          Word pivot, Word len, Word post) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (comp[i] == c && v[i] > 0) v[i] = rot1(v[i], pivot, len, post);
}

void s_shift_above_where(std::span<Word> v, std::span<const Word> comp, Word c,
                         Word pivot, Word delta) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (comp[i] == c && v[i] > pivot) v[i] += delta;
}

void s_cut_where(std::span<Word> v, std::span<Word> comp, Word c,
                 Word f, Word l, Word tail_delta, Word comp_new) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (comp[i] != c || v[i] <= 0) continue;
    if (v[i] > l) {
      v[i] -= tail_delta;
    } else if (v[i] > f) {
      v[i] -= f;
      comp[i] = comp_new;
    }
  }
}

void s_subst2_where(std::span<Word> v, std::span<const Word> comp, Word c,
                    Word a, Word ra, Word b, Word rb) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (comp[i] != c) continue;
    if (v[i] == a) v[i] = ra;
    else if (v[i] == b) v[i] = rb;
  }
}

void s_relabel(std::span<Word> comp, Word from, Word to) {
  for (auto& x : comp)
    if (x == from) x = to;
}

} // namespace

const KernelOps scalar_ops = {
    s_rotate_shift, s_shift_above,       s_cut,       s_subst2,
    s_rotate_shift_where, s_shift_above_where, s_cut_where, s_subst2_where,
    s_relabel,
};

} // namespace dynmpc::kern
