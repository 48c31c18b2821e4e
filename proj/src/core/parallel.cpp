#include "torunits/parallel.hpp"

#ifdef TORUNITS_HAVE_OPENMP
#include <omp.h>
#endif

namespace torunits {

void set_threads(int threads) {
#ifdef TORUNITS_HAVE_OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int max_threads() {
#ifdef TORUNITS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace torunits
