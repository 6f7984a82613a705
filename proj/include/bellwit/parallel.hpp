#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bellwit {

/// Resolves a --jobs style request to an actual thread count.
/// requested > 0 is taken literally; 0 means the JOBS environment variable
/// if set, otherwise the available hardware parallelism.
inline int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace bellwit
