#include <stdexcept>

#include "jhess/kernels.hpp"
#include "kernel_bodies.hpp"

namespace jhess::kernels::serial {

#define JHESS_FOR(work)
#include "kernels.inc"
#undef JHESS_FOR

}  // namespace jhess::kernels::serial
