#include "bellsim/angle.hpp"

#include <cmath>

#include "bellsim/errors.hpp"

namespace bellsim {

Angle Angle::from_radians(double r) {
  double v = std::fmod(r, std::numbers::pi);
  if (v < 0.0) v += std::numbers::pi;
  if (v >= std::numbers::pi) v = 0.0;  // fmod rounding at the boundary
  Angle a;
  a.radians_ = v;
  return a;
}

Angle Angle::from_degrees(double d) {
  return from_radians(d * std::numbers::pi / 180.0);
}

Angle relative_angle(Angle a, Angle b) {
  return Angle::from_radians(b.radians() - a.radians());
}

Angle PolarizerSetting::axis() const {
  if (!axis_) throw PreconditionViolation("axis() called on absent polarizer");
  return *axis_;
}

}  // namespace bellsim
