#include <stdexcept>
#include <string>

#include "kernel_bodies.hpp"

namespace jhess::kernels::detail {

namespace {

void require_even(Index extent, const char* who) {
  if (extent % 2 != 0 || extent == 0)
    throw std::invalid_argument(std::string(who) + ": dimension must be even and nonzero");
}

}  // namespace

void check_sh(std::span<const double> v, Index offset, Index extent, const char* who) {
  require_even(extent, who);
  if (static_cast<Index>(v.size()) != extent)
    throw std::invalid_argument(std::string(who) + ": direction length does not match matrix");
  if (offset < 0 || offset >= extent / 2)
    throw std::invalid_argument(std::string(who) + ": offset out of range");
}

void check_half(Index k, Index extent, const char* who) {
  require_even(extent, who);
  if (k < 0 || k >= extent / 2) throw std::invalid_argument(std::string(who) + ": plane index out of range");
}

void check_reflector(Index k, std::span<const double> w, Index extent, const char* who) {
  check_half(k, extent, who);
  if (static_cast<Index>(w.size()) != extent / 2 - k)
    throw std::invalid_argument(std::string(who) + ": reflector length must be h - k");
}

}  // namespace jhess::kernels::detail
