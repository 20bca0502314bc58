#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#if defined(DSHELL_HAVE_OPENMP)
#include <omp.h>
#endif

namespace dshell {

/// How index-parallel kernels run. `serial` is the reference path the
/// OpenMP path is tested against; both write results by index, so the output
/// does not depend on the thread count.
enum class Execution { serial, parallel };

inline constexpr Execution kDefaultExecution = Execution::parallel;

namespace detail {

template <typename Body>
void for_each_index_serial(std::ptrdiff_t n, Body& body) {
  for (std::ptrdiff_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
}

template <typename Body>
void for_each_index_omp(std::ptrdiff_t n, Body& body) {
#if defined(DSHELL_HAVE_OPENMP)
  // Exceptions may not leave the parallel region; keep the one from the
  // lowest index so the error reported matches the serial path.
  std::exception_ptr first;
  std::ptrdiff_t first_index = n;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(dshell_for_each_index)
      if (i < first_index) {
        first_index = i;
        first = std::current_exception();
      }
    }
  }
  if (first) std::rethrow_exception(first);
#else
  for_each_index_serial(n, body);
#endif
}

}  // namespace detail

/// Run body(i) for i in [0, n). Body must only write state owned by index i.
template <typename Body>
void for_each_index(Execution exec, std::size_t n, Body&& body) {
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Execution::parallel) {
    detail::for_each_index_omp(count, body);
  } else {
    detail::for_each_index_serial(count, body);
  }
}

/// out[i] = f(x[i]).
template <typename F>
std::vector<double> map_grid(Execution exec, const std::vector<double>& x, F&& f) {
  std::vector<double> out(x.size());
  for_each_index(exec, x.size(), [&](std::size_t i) { out[i] = f(x[i]); });
  return out;
}

/// `points` equally spaced values from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

/// Number of threads the parallel path would use.
int max_threads();

}  // namespace dshell
