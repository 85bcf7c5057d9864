#include "jhess/errors.hpp"

namespace jhess {

const char* to_string(BreakdownKind kind) {
  switch (kind) {
    case BreakdownKind::ZeroPivot: return "ZeroPivot";
    case BreakdownKind::ZeroNu: return "ZeroNu";
    case BreakdownKind::Mapping: return "MappingBreakdown";
  }
  return "unknown";
}

const char* to_string(SubStep substep) {
  switch (substep) {
    case SubStep::None: return "none";
    case SubStep::Odd: return "odd";
    case SubStep::Even: return "even";
  }
  return "unknown";
}

BreakdownError::BreakdownError(BreakdownKind kind, double pivot_value, int step, SubStep substep)
    : std::runtime_error(std::string("division by zero: ") + to_string(kind) +
                         (step > 0 ? " at step " + std::to_string(step) + " (" +
                                         to_string(substep) + ")"
                                   : std::string())),
      kind_(kind),
      pivot_(pivot_value),
      step_(step),
      substep_(substep) {}

BreakdownError BreakdownError::at(int step, SubStep substep) const {
  return BreakdownError(kind_, pivot_, step, substep);
}

}  // namespace jhess
