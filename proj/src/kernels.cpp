#include "dynmpc/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace dynmpc::kern {
namespace {

std::atomic<bool> g_force_scalar{false};

const KernelOps* pick() {
  if (g_force_scalar.load(std::memory_order_relaxed)) return &scalar_ops;
  if (const char* env = std::getenv("DYNMPC_FORCE_SCALAR"); env && env[0] == '1')
    return &scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return &avx2_ops;
#endif
  return &scalar_ops;
}

} // namespace

const KernelOps& ops() { return *pick(); }

const char* backend_name() {
#if defined(__x86_64__) || defined(_M_X64)
  if (&ops() == &avx2_ops) return "avx2";
#endif
  return "scalar";
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

} // namespace dynmpc::kern
