#include "bellsim/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bellsim/errors.hpp"

namespace bellsim {

namespace {
constexpr double kPi = std::numbers::pi;

double cos_sq(double x) {
  const double c = std::cos(x);
  return c * c;
}
}  // namespace

double qt_coincidence_prob(Angle phi) { return 0.5 * cos_sq(phi.radians()); }

double realist_coincidence_prob(Angle phi) {
  return 0.125 + 0.25 * cos_sq(phi.radians());
}

double singles_prob(const PolarizerSetting& setting, Angle lambda) {
  if (!setting.is_present()) return 1.0;
  return cos_sq(lambda.radians() - setting.axis().radians());
}

HvModelSpec HvModelSpec::malus() {
  HvModelSpec spec;
  spec.weight = [](double) { return 1.0 / kPi; };
  spec.response_a = [](const PolarizerSetting& s, double lambda) {
    return singles_prob(s, Angle::from_radians(lambda));
  };
  spec.response_b = spec.response_a;
  return spec;
}

double hv_coincidence_prob(const HvModelSpec& spec, const PolarizerSetting& a,
                           const PolarizerSetting& b, int panels) {
  if (panels < kMinQuadraturePanels)
    throw PreconditionViolation("quadrature needs at least " +
                                std::to_string(kMinQuadraturePanels) +
                                " panels, got " + std::to_string(panels));
  if (!spec.weight || !spec.response_a || !spec.response_b)
    throw InvalidSpec("model spec has an empty weight or response function");

  // Responses may graze the interval ends to rounding error.
  constexpr double kRangeSlack = 1e-9;
  const double h = kPi / panels;
  double integral = 0.0;
  double weight_mass = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double lambda = (k + 0.5) * h;
    const double w = spec.weight(lambda);
    if (!(w >= 0.0) || !std::isfinite(w))
      throw InvalidSpec("weight negative or non-finite at lambda = " +
                        std::to_string(lambda));
    const double ra = spec.response_a(a, lambda);
    const double rb = spec.response_b(b, lambda);
    for (double r : {ra, rb}) {
      if (!(r >= -kRangeSlack && r <= 1.0 + kRangeSlack) || !std::isfinite(r))
        throw InvalidSpec("response outside [0, 1] at lambda = " +
                          std::to_string(lambda));
    }
    weight_mass += w * h;
    integral += w * std::clamp(ra, 0.0, 1.0) * std::clamp(rb, 0.0, 1.0) * h;
  }

  // Normalization is a spec invariant; 1% catches unnormalized densities
  // while leaving room for genuinely narrow features at low panel counts.
  if (std::abs(weight_mass - 1.0) > 1e-2)
    throw InvalidSpec("weight integrates to " + std::to_string(weight_mass) +
                      ", expected 1 over [0, pi)");
  return std::clamp(integral, 0.0, 1.0);
}

PredictionModel PredictionModel::qt() {
  return PredictionModel(Kind::Qt, {}, kDefaultQuadraturePanels);
}

PredictionModel PredictionModel::realist() {
  return PredictionModel(Kind::RealistClosedForm, {},
                         kDefaultQuadraturePanels);
}

PredictionModel PredictionModel::general(HvModelSpec spec, int panels) {
  return PredictionModel(Kind::GeneralHv, std::move(spec), panels);
}

double PredictionModel::coincidence_prob(const PolarizerSetting& a,
                                         const PolarizerSetting& b) const {
  switch (kind_) {
    case Kind::Qt:
    case Kind::RealistClosedForm: {
      if (!a.is_present() && !b.is_present()) return 1.0;
      if (!a.is_present() || !b.is_present()) return 0.5;
      const Angle phi = relative_angle(a.axis(), b.axis());
      return kind_ == Kind::Qt ? qt_coincidence_prob(phi)
                               : realist_coincidence_prob(phi);
    }
    case Kind::GeneralHv:
      return hv_coincidence_prob(spec_, a, b, panels_);
  }
  return 0.0;  // unreachable
}

double PredictionModel::relative_prob(Angle phi) const {
  return coincidence_prob(PolarizerSetting::at(Angle{}),
                          PolarizerSetting::at(phi));
}

const char* PredictionModel::name() const {
  switch (kind_) {
    case Kind::Qt:
      return "qt";
    case Kind::RealistClosedForm:
      return "realist";
    case Kind::GeneralHv:
      return "general-hv";
  }
  return "?";
}

CountsTable model_counts_table(const PredictionModel& model,
                               const std::vector<Angle>& angles) {
  if (angles.empty())
    throw PreconditionViolation("model_counts_table needs at least one angle");
  CountsTable table;
  const auto base = PolarizerSetting::at(Angle{});
  for (Angle phi : angles) {
    CountsRow row;
    row.coincidences = model.relative_prob(phi);
    table.angles.insert_or_assign(phi.degrees(), row);
  }
  CountsRow z_row;
  z_row.coincidences =
      model.coincidence_prob(base, PolarizerSetting::absent());
  table.one_absent = z_row;
  CountsRow big_row;
  big_row.coincidences = model.coincidence_prob(PolarizerSetting::absent(),
                                                PolarizerSetting::absent());
  table.both_absent = big_row;
  return table;
}

}  // namespace bellsim
