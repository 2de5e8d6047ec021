#pragma once

namespace volset {

/// Caps OpenMP parallelism; 0 restores the runtime default.
void set_thread_count(int threads);
int thread_count();

/// Applies VOLSET_THREADS when set (0 = auto).
void configure_threads_from_env();

} // namespace volset
