#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace covertex {

inline int effective_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs <= 0) return omp_get_max_threads();
    return jobs;
#else
    (void)jobs;
    return 1;
#endif
}

// out[i] = f(i), computed in index order.
template <class T, class F>
std::vector<T> grid_map_serial(std::size_t n, F&& f) {
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
    return out;
}

// Same contract as grid_map_serial; the parallel path writes each result by
// index, so the output is identical for every thread count and schedule.
// The first exception thrown by f is rethrown after the loop drains.
template <class T, class F>
std::vector<T> grid_map(std::size_t n, F&& f, int jobs) {
    const int threads = effective_jobs(jobs);
    if (threads <= 1 || n <= 1) return grid_map_serial<T>(n, std::forward<F>(f));
#ifdef _OPENMP
    std::vector<T> out(n);
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(covertex_grid_error)
            {
                if (!first_error) first_error = std::current_exception();
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    return out;
#else
    return grid_map_serial<T>(n, std::forward<F>(f));
#endif
}

}  // namespace covertex
