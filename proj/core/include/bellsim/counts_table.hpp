#pragma once

#include <map>
#include <optional>
#include <string>

namespace bellsim {

/// One row of a coincidence table: raw coincidences plus optional
/// accidental estimate and singles rates measured during the same run.
struct CountsRow {
  double coincidences = 0.0;
  std::optional<double> accidentals;
  std::optional<double> singles_a;
  std::optional<double> singles_b;

  friend bool operator==(const CountsRow&, const CountsRow&) = default;
};

/// Coincidence counts (or rates, or probabilities) over a set of relative
/// polarizer angles, plus the polarizer-absent rows z (one absent) and
/// Z (both absent) used as Bell-test normalizers.
///
/// Angle keys are degrees, normalized to [0, 180). Counts and probabilities
/// share the layout; statistics normalize by the table's own Z.
class CountsTable {
 public:
  std::map<double, CountsRow> angles;
  std::optional<CountsRow> one_absent;   // z row
  std::optional<CountsRow> both_absent;  // Z row

  /// Row at `degrees` within 1e-9, or nullptr.
  const CountsRow* find_angle(double degrees) const;
  CountsRow* find_angle(double degrees);

  // Named rates used by the standard statistics; MissingSetting when absent.
  double x() const;  // coincidences at 22.5 deg
  double y() const;  // coincidences at 67.5 deg
  double z() const;  // one polarizer absent
  double Z() const;  // both polarizers absent

  bool has_z() const { return one_absent.has_value(); }
  bool has_Z() const { return both_absent.has_value(); }

  /// Extremes of the coincidence curve over the angle rows.
  double max_coincidences() const;
  double min_coincidences() const;

  /// Every row carries an accidental estimate (z and Z included, if present).
  bool accidentals_complete() const;

  /// All counts, accidentals and singles multiplied by `factor`.
  CountsTable scaled(double factor) const;

  /// Throws Error when any count, accidental or singles value is negative.
  void validate() const;

  friend bool operator==(const CountsTable&, const CountsTable&) = default;
};

}  // namespace bellsim
