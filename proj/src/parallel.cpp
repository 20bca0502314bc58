#include "dshell/parallel.hpp"

#include "dshell/errors.hpp"

namespace dshell {

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (points < 2) raise(ErrorKind::InvalidInput, "grid needs at least 2 points");
  if (!(hi > lo)) raise(ErrorKind::InvalidInput, "grid needs lo < hi");
  std::vector<double> x(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) x[i] = lo + step * static_cast<double>(i);
  x.back() = hi;
  return x;
}

int max_threads() {
#if defined(DSHELL_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace dshell
