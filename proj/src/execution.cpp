#include "ssy/execution.hpp"

#include <omp.h>

namespace ssy {

int parallel_threads()
{
    return omp_get_max_threads();
}

} // namespace ssy
