#include "edq/exec.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edq {

namespace {

int env_thread_cap() {
  const char* v = std::getenv("EDQ_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  const long n = std::strtol(v, nullptr, 10);
  return n > 0 ? static_cast<int>(n) : 0;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  const int cap = env_thread_cap();
  if (cap > 0 && cap < n) n = cap;
  return n;
}

void apply_thread_cap() {
#ifdef _OPENMP
  omp_set_num_threads(max_threads());
#endif
}

namespace detail {

void run_indexed(std::size_t n, ExecPolicy policy, void* ctx, void (*fn)(void*, std::size_t)) {
  if (policy == ExecPolicy::parallel) {
    const int nt = max_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nt)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      fn(ctx, static_cast<std::size_t>(i));
    }
    (void)nt;
  } else {
    for (std::size_t i = 0; i < n; ++i) fn(ctx, i);
  }
}

}  // namespace detail

}  // namespace edq
