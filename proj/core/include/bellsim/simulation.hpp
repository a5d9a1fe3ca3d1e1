#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bellsim/angle.hpp"
#include "bellsim/counts_table.hpp"
#include "bellsim/rng.hpp"

namespace bellsim {

/// How the common polarization direction of each emitted pair is drawn.
/// Uniform on [0, pi) by default; a custom density is tabulated into an
/// inverse CDF so sampling stays deterministic and cheap.
class LambdaDistribution {
 public:
  LambdaDistribution() = default;  // uniform

  static LambdaDistribution uniform() { return {}; }

  /// `density` is any nonnegative integrable function on [0, pi); it is
  /// normalized internally. InvalidSpec on negative or non-finite values.
  static LambdaDistribution from_density(std::function<double(double)> density,
                                         int table_size = 4096);

  double sample(Rng& rng) const;
  bool is_uniform() const { return inverse_cdf_.empty(); }

 private:
  // Equally spaced samples of the inverse CDF on [0, 1]; empty == uniform.
  std::vector<double> inverse_cdf_;
};

/// The emitting source: a pulsed pair emitter.
struct SourceConfig {
  double emission_rate = 1.5e7;  // pairs/second
  double pulse_lifetime = 5e-9;  // decay constant of the B-arm lag, seconds
  double min_gap = 0.0;          // dead interval between emissions, seconds
  LambdaDistribution lambda_distribution;
};

/// One detector arm. Detection probability is efficiency times the Malus
/// intensity for the arm's polarizer setting (linear intensity response).
struct DetectorConfig {
  double efficiency = 0.25;   // in (0, 1]
  double dark_rate = 200.0;   // signal-independent counts/second
  double jitter_sigma = 3e-10;  // Gaussian timestamp noise, seconds
};

/// One timed run: polarizer settings, duration, coincidence window, the
/// delay used for accidental estimation, and the seeding identity.
struct RunConfig {
  PolarizerSetting arm_a = PolarizerSetting::at_degrees(0.0);
  PolarizerSetting arm_b = PolarizerSetting::at_degrees(22.5);
  double duration = 0.01;        // seconds
  double window_lo = -3e-9;      // seconds, relative to dt = tB - tA = 0
  double window_hi = 17e-9;      // seconds
  double accidental_delay = 1e-7;  // seconds; must exceed 5x window width
  std::uint64_t master_seed = 1;
  std::uint64_t run_index = 0;
};

/// All parameters of one simulated experiment.
struct ExperimentConfig {
  SourceConfig source;
  DetectorConfig detector_a;
  DetectorConfig detector_b;
  RunConfig run;
};

// Throw InvalidConfig naming the offending field.
void validate(const SourceConfig& source);
void validate(const DetectorConfig& detector, const char* section);
void validate(const RunConfig& run);
void validate(const ExperimentConfig& config);

/// Truth tag for detections that did not come from an emission.
inline constexpr std::int64_t kNoiseEmission = -1;

/// One detector click. `emission` indexes the emission event that caused it
/// (kNoiseEmission for dark counts); `lambda` is the pair's hidden
/// polarization in radians (NaN for dark counts).
struct Detection {
  double time = 0.0;
  std::int64_t emission = kNoiseEmission;
  double lambda = 0.0;
};

/// Time-ordered detections from one arm, with truth metadata retained.
struct DetectionStream {
  std::vector<Detection> events;

  std::size_t size() const { return events.size(); }
  bool empty() const { return events.empty(); }
  double rate(double duration) const {
    return duration > 0.0 ? static_cast<double>(events.size()) / duration
                          : 0.0;
  }
};

/// Generate both detector streams for one run.
///
/// Emissions form a Poisson process at `emission_rate`, thinned so that
/// consecutive kept emissions are at least `min_gap` apart. Each emission
/// draws a common polarization lambda; each arm independently registers a
/// detection with probability efficiency x response(setting, lambda)
/// (the factorability assumption). The A-arm click lands at the emission
/// time; the B-arm click lags by an exponential with mean `pulse_lifetime`
/// (the pulse is prolonged, and the spectrum peak decays on that scale).
/// Both timestamps get Gaussian jitter. Dark counts are independent Poisson
/// processes on each stream.
///
/// Identical (master_seed, run_index, configs) reproduce bit-identical
/// streams; different run_index values give independent streams.
std::pair<DetectionStream, DetectionStream> simulate_run(
    const SourceConfig& source, const DetectorConfig& det_a,
    const DetectorConfig& det_b, const RunConfig& run);

/// Run one setting per relative angle plus the (a, absent) and
/// (absent, absent) configurations, and assemble a CountsTable: greedy
/// window coincidences, delay-estimated accidentals, and measured singles
/// rates per row. Every setting gets its own seed derived from
/// (master_seed, run_index, setting index), so the scan can run in any
/// order. PreconditionViolation when `relative_angles` is empty.
CountsTable run_angle_scan(const SourceConfig& source,
                           const DetectorConfig& det_a,
                           const DetectorConfig& det_b, const RunConfig& base,
                           const std::vector<Angle>& relative_angles);

}  // namespace bellsim
