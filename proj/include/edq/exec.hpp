#pragma once

#include <cstddef>

namespace edq {

// Every parallel kernel also runs in serial mode; both orders produce
// bit-identical results because units never share mutable state.
enum class ExecPolicy { serial, parallel };

// Worker count: min(omp_get_max_threads(), EDQ_THREADS) when the env var is set.
int max_threads();

// Apply the EDQ_THREADS cap process-wide (no-op without OpenMP).
void apply_thread_cap();

namespace detail {
void run_indexed(std::size_t n, ExecPolicy policy, void* ctx, void (*fn)(void*, std::size_t));
}

// Runs body(i) for i in [0, n); parallel iterations write only to their own slots.
template <class F>
void for_each_index(std::size_t n, ExecPolicy policy, F&& body) {
  detail::run_indexed(n, policy, &body,
                      [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); });
}

}  // namespace edq
