#include "coalition/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coalition {

namespace {
int default_threads() {
#ifdef _OPENMP
  static const int d = omp_get_num_procs();
  return d;
#else
  return 1;
#endif
}
}  // namespace

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n > 0 ? n : default_threads());
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return default_threads();
#endif
}

}  // namespace coalition
