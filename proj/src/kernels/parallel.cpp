#include <stdexcept>

#include "jhess/kernels.hpp"
#include "kernel_bodies.hpp"

namespace jhess::kernels::parallel {

#define JHESS_PRAGMA(x) _Pragma(#x)
#define JHESS_FOR(work) JHESS_PRAGMA(omp parallel for schedule(static) if ((work) >= detail::kParallelWork))
#include "kernels.inc"
#undef JHESS_FOR
#undef JHESS_PRAGMA

}  // namespace jhess::kernels::parallel
