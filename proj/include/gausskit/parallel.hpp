#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gausskit {

// Execution policy for the batch kernels (coefficient batches, grid
// transforms, curve sampling). The serial path is the reference
// implementation; the parallel path must produce identical results because
// every loop iteration writes an independent output slot.
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
    if (exec == Exec::parallel) {
        std::exception_ptr err;
        std::mutex err_mutex;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
                std::scoped_lock lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (std::size_t i = 0; i < n; ++i) fn(i);
    }
}

}  // namespace gausskit
