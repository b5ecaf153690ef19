#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>

namespace nrqc {

// Execution policy for the data-parallel kernels (Monte-Carlo sampling,
// detuning sweeps). Serial is the reference implementation: both policies
// must produce identical results because all per-index work is seeded by
// index, never by thread.
enum class ExecPolicy { Serial, Parallel };

// Worker count for ExecPolicy::Parallel; 0 means the OpenMP default.
// Overridable through the NRQC_WORKERS environment variable.
int worker_count();

// Applies fn(i) for i in [0, n). With ExecPolicy::Parallel the iterations
// run under OpenMP; fn must only write to per-index slots.
void parallel_for_indexed(std::int64_t n, ExecPolicy policy,
                          const std::function<void(std::int64_t)>& fn);

}  // namespace nrqc
