#include "latticeforge/threads.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lf {

int thread_cap() {
    const char* s = std::getenv("LATTICEFORGE_THREADS");
    if (!s || !*s)
        return 0;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || v <= 0)
        return 0;
    return static_cast<int>(v);
}

int worker_count() {
#ifdef _OPENMP
    const int avail = omp_get_max_threads();
    const int cap = thread_cap();
    return cap > 0 && cap < avail ? cap : avail;
#else
    return 1;
#endif
}

} // namespace lf
