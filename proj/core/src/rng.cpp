#include "bellsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace bellsim {

double Rng::normal(double sigma) {
  if (sigma <= 0.0) return 0.0;
  // Box-Muller, first branch only; the spare is discarded to keep the
  // generator stateless between calls.
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return sigma * std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace bellsim
