#include "volset/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace volset {

namespace {
int default_threads = 0;
}

void set_thread_count(int threads)
{
    if (default_threads == 0)
        default_threads = omp_get_max_threads();
    omp_set_num_threads(threads > 0 ? threads : default_threads);
}

int thread_count()
{
    return omp_get_max_threads();
}

void configure_threads_from_env()
{
    if (const char* env = std::getenv("VOLSET_THREADS")) {
        try {
            set_thread_count(std::stoi(env));
        } catch (const std::exception&) {
            // malformed values leave the runtime default in place
        }
    }
}

} // namespace volset
