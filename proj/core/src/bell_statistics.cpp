#include "bellsim/bell_statistics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bellsim/csv_io.hpp"
#include "bellsim/errors.hpp"

namespace bellsim {

const char* statistic_name(Statistic s) {
  switch (s) {
    case Statistic::Std:
      return "std";
    case Statistic::Visibility:
      return "visibility";
    case Statistic::Chsh:
      return "chsh";
    case Statistic::Freedman:
      return "freedman";
  }
  return "?";
}

double statistic_limit(Statistic s) {
  switch (s) {
    case Statistic::Std:
      return 2.0;
    case Statistic::Visibility:
      return 1.0 / std::numbers::sqrt2;
    case Statistic::Chsh:
      return 0.0;
    case Statistic::Freedman:
      return 0.25;
  }
  return 0.0;
}

Assumption statistic_assumption(Statistic s) {
  switch (s) {
    case Statistic::Std:
    case Statistic::Visibility:
      return Assumption::FairSampling;
    case Statistic::Chsh:
    case Statistic::Freedman:
      return Assumption::NoEnhancement;
  }
  return Assumption::FairSampling;
}

BellResult make_bell_result(Statistic s, double value) {
  BellResult r;
  r.statistic = s;
  r.value = value;
  r.limit = statistic_limit(s);
  r.assumption = statistic_assumption(s);
  r.violated = value > r.limit;
  return r;
}

BellResult s_std(double x, double y) {
  if (x + y <= 0.0) throw DegenerateInput("s_std needs x + y > 0");
  return make_bell_result(Statistic::Std, 4.0 * (x - y) / (x + y));
}

BellResult s_visibility(double max, double min) {
  if (!(max >= min) || min < 0.0)
    throw PreconditionViolation("s_visibility needs max >= min >= 0");
  if (max + min <= 0.0) throw DegenerateInput("s_visibility needs max > 0");
  return make_bell_result(Statistic::Visibility, (max - min) / (max + min));
}

namespace {
// Shared x/y/z/Z extraction for the normalized statistics.
struct NormalizedRates {
  double x, y, z, big_z;
};

NormalizedRates chsh_rates(const CountsTable& table) {
  NormalizedRates r{table.x(), table.y(), table.z(), table.Z()};
  if (r.big_z <= 0.0) throw DegenerateInput("Z must be positive");
  return r;
}
}  // namespace

BellResult s_chsh(const CountsTable& table) {
  const auto r = chsh_rates(table);
  return make_bell_result(Statistic::Chsh,
                          (3.0 * r.x - r.y - 2.0 * r.z) / r.big_z);
}

BellResult s_freedman(const CountsTable& table) {
  const auto r = chsh_rates(table);
  return make_bell_result(Statistic::Freedman, (r.x - r.y) / r.big_z);
}

namespace {
CountsRow subtract_row(const CountsRow& row, const std::string& key) {
  if (!row.accidentals)
    throw PreconditionViolation("no accidental estimate for '" + key + "'");
  const double adjusted = row.coincidences - *row.accidentals;
  if (adjusted < 0.0) throw NegativeResult(key, adjusted);
  CountsRow out = row;
  out.coincidences = adjusted;
  out.accidentals.reset();
  return out;
}
}  // namespace

CountsTable subtract_accidentals(const CountsTable& table) {
  CountsTable out;
  for (const auto& [deg, row] : table.angles)
    out.angles.emplace(deg, subtract_row(row, "phi:" + format_number(deg)));
  if (table.one_absent) out.one_absent = subtract_row(*table.one_absent, "z");
  if (table.both_absent)
    out.both_absent = subtract_row(*table.both_absent, "Z");
  return out;
}

}  // namespace bellsim
