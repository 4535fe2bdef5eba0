// OpenMP-backed parallel loop with a serial fallback.
//
// Every parallel use in this codebase follows the same discipline: the loop
// body writes only to its own index slot, and any reduction over the slots
// happens afterwards, serially, in index order. Results are therefore
// bit-identical between serial and parallel execution regardless of thread
// count or scheduling. The test suite asserts this equivalence.
#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

#include <exception>
#include <mutex>

namespace seczeta {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

// Run body(i) for i in [0, n). With `parallel` false (or without OpenMP)
// this is a plain loop; exceptions from worker iterations are captured and
// rethrown on the calling thread.
template <class F>
void parallel_for(long n, F&& body, bool parallel = true) {
#ifdef _OPENMP
    if (parallel && n > 1 && max_threads() > 1) {
        std::exception_ptr err;
        std::mutex err_mutex;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mutex);
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#endif
    for (long i = 0; i < n; ++i) body(i);
}

}  // namespace seczeta
