#pragma once

#include <functional>
#include <vector>

#include "bellsim/angle.hpp"
#include "bellsim/counts_table.hpp"

namespace bellsim {

/// Quantum-theory probability of a same-channel coincidence for a perfect
/// experiment with plane-polarized light: (1/2) cos^2(phi). Range [0, 1/2].
double qt_coincidence_prob(Angle phi);

/// Closed form of the pulsed-classical-light model with Malus responses and
/// uniform polarization: 1/8 + (1/4) cos^2(phi) = 1/4 + (1/8) cos(2 phi).
/// Range [1/8, 3/8]; the non-zero minimum is the model's signature.
double realist_coincidence_prob(Angle phi);

/// Single-arm detection probability for polarization `lambda`:
/// cos^2(lambda - axis) through a polarizer, 1 when the polarizer is absent.
double singles_prob(const PolarizerSetting& setting, Angle lambda);

/// A factorable hidden-variable model: a weight density over the common
/// polarization direction lambda in [0, pi), and one response function per
/// arm giving the detection probability for a (setting, lambda) pair.
///
/// The weight must integrate to 1 over [0, pi) (checked at quadrature time
/// to 1% of the panel sum); responses must stay within [0, 1].
struct HvModelSpec {
  std::function<double(double)> weight;
  std::function<double(const PolarizerSetting&, double)> response_a;
  std::function<double(const PolarizerSetting&, double)> response_b;

  /// Uniform weight 1/pi with Malus-law responses on both arms; integrates
  /// to the realist closed form.
  static HvModelSpec malus();
};

inline constexpr int kDefaultQuadraturePanels = 4096;
inline constexpr int kMinQuadraturePanels = 16;

/// Average coincidence probability of a factorable model,
///   integral over [0, pi) of weight(l) * response_a(a, l) * response_b(b, l),
/// by the midpoint rule with `panels` equal subintervals. The integrand is
/// smooth and 180deg-periodic, so midpoint converges spectrally fast.
///
/// Throws PreconditionViolation when panels < 16 and InvalidSpec when the
/// weight is negative, a response leaves [0, 1] at any node, or the weight
/// fails the normalization check.
double hv_coincidence_prob(const HvModelSpec& spec, const PolarizerSetting& a,
                           const PolarizerSetting& b,
                           int panels = kDefaultQuadraturePanels);

/// An analytic coincidence-probability model. The closed forms stay exact;
/// arbitrary factorable variants go through the general quadrature path.
class PredictionModel {
 public:
  enum class Kind { Qt, RealistClosedForm, GeneralHv };

  static PredictionModel qt();
  static PredictionModel realist();
  static PredictionModel general(HvModelSpec spec,
                                 int panels = kDefaultQuadraturePanels);

  /// Coincidence probability for two polarizer settings (either may be
  /// absent). The closed-form models use z = 1/2, Z = 1 for absent settings.
  double coincidence_prob(const PolarizerSetting& a,
                          const PolarizerSetting& b) const;

  /// Both polarizers present at relative angle phi.
  double relative_prob(Angle phi) const;

  Kind kind() const { return kind_; }
  const char* name() const;

 private:
  PredictionModel(Kind kind, HvModelSpec spec, int panels)
      : kind_(kind), spec_(std::move(spec)), panels_(panels) {}

  Kind kind_;
  HvModelSpec spec_;
  int panels_ = kDefaultQuadraturePanels;
};

/// Evaluate a model at each relative angle plus the z (one absent) and
/// Z (both absent) configurations, as a probability-valued CountsTable.
/// Throws PreconditionViolation when `angles` is empty.
CountsTable model_counts_table(const PredictionModel& model,
                               const std::vector<Angle>& angles);

}  // namespace bellsim
