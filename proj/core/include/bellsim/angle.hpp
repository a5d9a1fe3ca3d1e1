#pragma once

#include <numbers>
#include <optional>

namespace bellsim {

/// A plane angle stored in radians and normalized to [0, pi).
///
/// Polarizer axes and polarization directions are 180deg-periodic, so the
/// normalized representative is unique. Degrees are used at every external
/// boundary (CLI flags, config files, CSV keys); radians internally.
class Angle {
 public:
  constexpr Angle() = default;

  static Angle from_radians(double r);
  static Angle from_degrees(double d);

  double radians() const { return radians_; }
  double degrees() const { return radians_ * 180.0 / std::numbers::pi; }

  /// Axis obtained by rotating this one by `delta` radians (re-normalized).
  Angle rotated(double delta) const { return from_radians(radians_ + delta); }

  friend bool operator==(Angle a, Angle b) = default;

 private:
  double radians_ = 0.0;
};

/// Relative angle between two axes, i.e. (b - a) reduced mod 180deg.
Angle relative_angle(Angle a, Angle b);

/// One polarizer: present with a given axis, or removed from the beam.
/// Absence transmits everything (probability 1 for every polarization).
class PolarizerSetting {
 public:
  static PolarizerSetting absent() { return PolarizerSetting{}; }
  static PolarizerSetting at(Angle axis) { return PolarizerSetting{axis}; }
  static PolarizerSetting at_degrees(double d) {
    return PolarizerSetting{Angle::from_degrees(d)};
  }

  bool is_present() const { return axis_.has_value(); }
  Angle axis() const;  // PreconditionViolation when absent

  friend bool operator==(const PolarizerSetting&,
                         const PolarizerSetting&) = default;

 private:
  PolarizerSetting() = default;
  explicit PolarizerSetting(Angle axis) : axis_(axis) {}
  std::optional<Angle> axis_;
};

}  // namespace bellsim
