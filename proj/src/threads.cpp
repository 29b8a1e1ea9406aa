#include "curvebody/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef CURVEBODY_HAVE_OPENMP
#include <omp.h>
#endif

namespace curvebody {

int thread_count() {
  if (const char* env = std::getenv("CURVEBODY_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
      // fall through to the default below
    }
  }
#ifdef CURVEBODY_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace curvebody
