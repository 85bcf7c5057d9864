#pragma once

#include <stdexcept>
#include <string>

namespace jhess {

enum class BreakdownKind {
  ZeroPivot,  // sh1-type: the (n+1)-th entry of the vector is negligible
  ZeroNu,     // sh2-type: nu = a(n+1) is negligible
  Mapping,    // general mapping with x^J y ~ 0
};

enum class SubStep { None, Odd, Even };

const char* to_string(BreakdownKind kind);
const char* to_string(SubStep substep);

/// A symplectic Householder coefficient could not be formed because its pivot
/// is (numerically) zero. `step` is the 1-based reduction step, 0 when raised
/// outside a reduction.
class BreakdownError : public std::runtime_error {
 public:
  BreakdownError(BreakdownKind kind, double pivot_value, int step = 0,
                 SubStep substep = SubStep::None);

  BreakdownKind kind() const { return kind_; }
  double pivot_value() const { return pivot_; }
  int step() const { return step_; }
  SubStep substep() const { return substep_; }

  /// Same breakdown, tagged with the reduction step where it happened.
  BreakdownError at(int step, SubStep substep) const;

 private:
  BreakdownKind kind_;
  double pivot_;
  int step_;
  SubStep substep_;
};

}  // namespace jhess
