#pragma once
// Data-parallel sweep kernel. Every grid scan and randomized campaign maps
// independent cells into a preallocated result array and reduces serially,
// so the parallel and serial paths produce identical output. The serial
// path is the reference implementation used by tests and the benchmark.

#include <chrono>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace opuc {

enum class ExecPolicy { Serial, Parallel };

inline ExecPolicy default_policy() {
#ifdef _OPENMP
    return ExecPolicy::Parallel;
#else
    return ExecPolicy::Serial;
#endif
}

template <typename F>
void sweep_for(std::size_t n, ExecPolicy policy, F&& body) {
    if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) body(i);
}

template <typename T, typename F>
std::vector<T> sweep_map(std::size_t n, ExecPolicy policy, F&& producer) {
    std::vector<T> out(n);
    sweep_for(n, policy, [&](std::size_t i) { out[i] = producer(i); });
    return out;
}

inline double sweep_wall_time() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace opuc
