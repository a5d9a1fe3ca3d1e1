#include "bellsim/counts_table.hpp"

#include <cmath>
#include <limits>

#include "bellsim/errors.hpp"

namespace bellsim {

namespace {
constexpr double kAngleTolerance = 1e-9;

void validate_row(const CountsRow& row, const std::string& key) {
  if (row.coincidences < 0.0 || !std::isfinite(row.coincidences))
    throw Error("negative or non-finite count at '" + key + "'");
  for (const auto& field : {row.accidentals, row.singles_a, row.singles_b}) {
    if (field && (*field < 0.0 || !std::isfinite(*field)))
      throw Error("negative or non-finite value at '" + key + "'");
  }
}

CountsRow scale_row(const CountsRow& row, double factor) {
  CountsRow out = row;
  out.coincidences *= factor;
  if (out.accidentals) *out.accidentals *= factor;
  if (out.singles_a) *out.singles_a *= factor;
  if (out.singles_b) *out.singles_b *= factor;
  return out;
}
}  // namespace

const CountsRow* CountsTable::find_angle(double degrees) const {
  auto it = angles.lower_bound(degrees - kAngleTolerance);
  if (it != angles.end() && std::abs(it->first - degrees) <= kAngleTolerance)
    return &it->second;
  return nullptr;
}

CountsRow* CountsTable::find_angle(double degrees) {
  const auto* self = static_cast<const CountsTable*>(this);
  return const_cast<CountsRow*>(self->find_angle(degrees));
}

double CountsTable::x() const {
  const CountsRow* row = find_angle(22.5);
  if (!row) throw MissingSetting("no entry at 22.5 deg");
  return row->coincidences;
}

double CountsTable::y() const {
  const CountsRow* row = find_angle(67.5);
  if (!row) throw MissingSetting("no entry at 67.5 deg");
  return row->coincidences;
}

double CountsTable::z() const {
  if (!one_absent) throw MissingSetting("no z row (one polarizer absent)");
  return one_absent->coincidences;
}

double CountsTable::Z() const {
  if (!both_absent) throw MissingSetting("no Z row (both polarizers absent)");
  return both_absent->coincidences;
}

double CountsTable::max_coincidences() const {
  if (angles.empty()) throw MissingSetting("table has no angle rows");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [deg, row] : angles) best = std::max(best, row.coincidences);
  return best;
}

double CountsTable::min_coincidences() const {
  if (angles.empty()) throw MissingSetting("table has no angle rows");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [deg, row] : angles) best = std::min(best, row.coincidences);
  return best;
}

bool CountsTable::accidentals_complete() const {
  for (const auto& [deg, row] : angles)
    if (!row.accidentals) return false;
  if (one_absent && !one_absent->accidentals) return false;
  if (both_absent && !both_absent->accidentals) return false;
  return true;
}

CountsTable CountsTable::scaled(double factor) const {
  CountsTable out;
  for (const auto& [deg, row] : angles)
    out.angles.emplace(deg, scale_row(row, factor));
  if (one_absent) out.one_absent = scale_row(*one_absent, factor);
  if (both_absent) out.both_absent = scale_row(*both_absent, factor);
  return out;
}

void CountsTable::validate() const {
  for (const auto& [deg, row] : angles)
    validate_row(row, "phi:" + std::to_string(deg));
  if (one_absent) validate_row(*one_absent, "z");
  if (both_absent) validate_row(*both_absent, "Z");
}

}  // namespace bellsim
