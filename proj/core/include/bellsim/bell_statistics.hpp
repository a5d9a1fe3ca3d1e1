#pragma once

#include "bellsim/counts_table.hpp"

namespace bellsim {

/// The four single-channel Bell-test statistics used on coincidence curves
/// from rotationally invariant, symmetrical experiments.
enum class Statistic { Std, Visibility, Chsh, Freedman };

/// Auxiliary assumption under which each statistic's limit holds.
enum class Assumption { FairSampling, NoEnhancement };

const char* statistic_name(Statistic s);
double statistic_limit(Statistic s);
Assumption statistic_assumption(Statistic s);

/// One evaluated test statistic with its local-realist upper limit.
/// `violated` holds exactly when value > limit.
struct BellResult {
  Statistic statistic;
  double value = 0.0;
  double limit = 0.0;
  Assumption assumption = Assumption::FairSampling;
  bool violated = false;
};

BellResult make_bell_result(Statistic s, double value);

/// S_Std = 4 (x - y) / (x + y), limit 2 under fair sampling.
/// x and y are the rates at 22.5 and 67.5 deg. DegenerateInput when x+y = 0.
BellResult s_std(double x, double y);

/// S_V = (max - min) / (max + min), limit 1/sqrt(2) under fair sampling.
/// The limit is stored unrounded; the conventional 0.71 would misclassify
/// borderline values. PreconditionViolation unless max >= min >= 0 and
/// max > 0; DegenerateInput when max + min = 0.
BellResult s_visibility(double max, double min);

/// S_C = (3x - y - 2z) / Z, limit 0 under no enhancement.
/// Requires table entries at 22.5 and 67.5 deg plus z and Z with Z > 0.
BellResult s_chsh(const CountsTable& table);

/// S_F = (x - y) / Z, limit 1/4 under no enhancement. Requirements as s_chsh.
BellResult s_freedman(const CountsTable& table);

/// A new table with every coincidence entry (z and Z included) reduced by
/// its accidental estimate, and the accidental fields cleared. Singles rates
/// are untouched; the input table is unchanged.
///
/// PreconditionViolation when any adjusted row lacks an accidental value.
/// NegativeResult (naming the key) when a subtraction goes below zero;
/// clamping would hide exactly the pathology this operation exists to study.
CountsTable subtract_accidentals(const CountsTable& table);

}  // namespace bellsim
