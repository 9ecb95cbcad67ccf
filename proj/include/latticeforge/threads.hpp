#pragma once

namespace lf {

/// Worker cap from LATTICEFORGE_THREADS; 0 means "no cap" (library default).
int thread_cap();

/// Number of workers parallel kernels will actually use.
int worker_count();

} // namespace lf
