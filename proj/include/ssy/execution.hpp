#pragma once

namespace ssy {

// Selects the loop kernel for data-parallel work. The serial kernels are the
// reference implementation; the OpenMP kernels must produce identical results.
enum class Execution { Serial, Parallel };

// Number of OpenMP threads available to the parallel kernels (1 without OpenMP).
int parallel_threads();

} // namespace ssy
