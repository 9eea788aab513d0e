#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "dynmpc/kernels.hpp"

namespace dynmpc::kern {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256i bset(Word v) { return _mm256_set1_epi64x(v); }

inline __m256i blend(__m256i a, __m256i b, __m256i mask) {
  return _mm256_blendv_epi8(a, b, mask);
}

void a_rotate_shift(std::span<Word> v, Word pivot, Word len, Word post) {
  const __m256i pv = bset(pivot), lv = bset(len), cv = bset(1 + post), zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= v.size(); i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&v[i]));
    __m256i pos = _mm256_cmpgt_epi64(x, zero);
    __m256i d = _mm256_sub_epi64(x, pv);
    __m256i neg = _mm256_cmpgt_epi64(zero, d);
    d = _mm256_add_epi64(d, _mm256_and_si256(neg, lv));
    __m256i res = _mm256_add_epi64(d, cv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&v[i]), blend(x, res, pos));
  }
  scalar_ops.rotate_shift(v.subspan(i), pivot, len, post);
}

void a_shift_above(std::span<Word> v, Word pivot, Word delta) {
  const __m256i pv = bset(pivot), dv = bset(delta);
  std::size_t i = 0;
  for (; i + kLanes <= v.size(); i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&v[i]));
    __m256i m = _mm256_cmpgt_epi64(x, pv);
    x = _mm256_add_epi64(x, _mm256_and_si256(m, dv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&v[i]), x);
  }
  scalar_ops.shift_above(v.subspan(i), pivot, delta);
}

void a_cut(std::span<Word> v, Word f, Word l, Word tail_delta) {
  const __m256i fv = bset(f), lv = bset(l), tv = bset(tail_delta);
  std::size_t i = 0;
  for (; i + kLanes <= v.size(); i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&v[i]));
    __m256i above_l = _mm256_cmpgt_epi64(x, lv);
    __m256i above_f = _mm256_cmpgt_epi64(x, fv);
    __m256i interior = _mm256_andnot_si256(above_l, above_f);
    __m256i sub = _mm256_or_si256(_mm256_and_si256(interior, fv), _mm256_and_si256(above_l, tv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&v[i]), _mm256_sub_epi64(x, sub));
  }
  scalar_ops.cut(v.subspan(i), f, l, tail_delta);
}

void a_subst2(std::span<Word> v, Word a, Word ra, Word b, Word rb) {
  const __m256i av = bset(a), rav = bset(ra), bv = bset(b), rbv = bset(rb);
  std::size_t i = 0;
  for (; i + kLanes <= v.size(); i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&v[i]));
    __m256i ma = _mm256_cmpeq_epi64(x, av);
    __m256i mb = _mm256_cmpeq_epi64(x, bv);
    x = blend(blend(x, rav, ma), rbv, mb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&v[i]), x);
  }
  scalar_ops.subst2(v.subspan(i), a, ra, b, rb);
}

void a_rotate_shift_where(std::span<Word> v, std::span<const Word> comp, Word c,
                          Word pivot, Word len, Word post) {
  const __m256i pv = bset(pivot), lv = bset(len), cv1 = bset(1 + post), cm = bset(c),
                zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= v.size(); i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&v[i]));
    __m256i cc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&comp[i]));
    __m256i sel = _mm256_and_si256(_mm256_cmpeq_epi64(cc, cm), _mm256_cmpgt_epi64(x, zero));
    __m256i d = _mm256_sub_epi64(x, pv);
    __m256i neg = _mm256_cmpgt_epi64(zero, d);
    d = _mm256_add_epi64(d, _mm256_and_si256(neg, lv));
    __m256i res = _mm256_add_epi64(d, cv1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&v[i]), blend(x, res, sel));
  }
  scalar_ops.rotate_shift_where(v.subspan(i), comp.subspan(i), c, pivot, len, post);
}

void a_shift_above_where(std::span<Word> v, std::span<const Word> comp, Word c,
                         Word pivot, Word delta) {
  const __m256i pv = bset(pivot), dv = bset(delta), cm = bset(c);
  std::size_t i = 0;
  for (; i + kLanes <= v.size(); i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&v[i]));
    __m256i cc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&comp[i]));
    __m256i sel = _mm256_and_si256(_mm256_cmpeq_epi64(cc, cm), _mm256_cmpgt_epi64(x, pv));
    x = _mm256_add_epi64(x, _mm256_and_si256(sel, dv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&v[i]), x);
  }
  scalar_ops.shift_above_where(v.subspan(i), comp.subspan(i), c, pivot, delta);
}

void a_cut_where(std::span<Word> v, std::span<Word> comp, Word c,
                 Word f, Word l, Word tail_delta, Word comp_new) {
  const __m256i fv = bset(f), lv = bset(l), tv = bset(tail_delta), cm = bset(c),
                cnv = bset(comp_new);
  std::size_t i = 0;
  for (; i + kLanes <= v.size(); i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&v[i]));
    __m256i cc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&comp[i]));
    __m256i mc = _mm256_cmpeq_epi64(cc, cm);
    __m256i above_l = _mm256_and_si256(mc, _mm256_cmpgt_epi64(x, lv));
    __m256i above_f = _mm256_and_si256(mc, _mm256_cmpgt_epi64(x, fv));
    __m256i interior = _mm256_andnot_si256(above_l, above_f);
    __m256i sub = _mm256_or_si256(_mm256_and_si256(interior, fv), _mm256_and_si256(above_l, tv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&v[i]), _mm256_sub_epi64(x, sub));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&comp[i]), blend(cc, cnv, interior));
  }
  scalar_ops.cut_where(v.subspan(i), comp.subspan(i), c, f, l, tail_delta, comp_new);
}

void a_subst2_where(std::span<Word> v, std::span<const Word> comp, Word c,
                    Word a, Word ra, Word b, Word rb) {
  const __m256i av = bset(a), rav = bset(ra), bv = bset(b), rbv = bset(rb), cm = bset(c);
  std::size_t i = 0;
  for (; i + kLanes <= v.size(); i += kLanes) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&v[i]));
    __m256i cc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&comp[i]));
    __m256i mc = _mm256_cmpeq_epi64(cc, cm);
    __m256i ma = _mm256_and_si256(mc, _mm256_cmpeq_epi64(x, av));
    __m256i mb = _mm256_and_si256(mc, _mm256_cmpeq_epi64(x, bv));
    x = blend(blend(x, rav, ma), rbv, mb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&v[i]), x);
  }
  scalar_ops.subst2_where(v.subspan(i), comp.subspan(i), c, a, ra, b, rb);
}

void a_relabel(std::span<Word> comp, Word from, Word to) {
  const __m256i fv = bset(from), tv = bset(to);
  std::size_t i = 0;
  for (; i + kLanes <= comp.size(); i += kLanes) {
    __m256i cc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&comp[i]));
    __m256i m = _mm256_cmpeq_epi64(cc, fv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&comp[i]), blend(cc, tv, m));
  }
  scalar_ops.relabel(comp.subspan(i), from, to);
}

} // namespace

const KernelOps avx2_ops = {
    a_rotate_shift, a_shift_above,       a_cut,       a_subst2,
    a_rotate_shift_where, a_shift_above_where, a_cut_where, a_subst2_where,
    a_relabel,
};

} // namespace dynmpc::kern

#endif
