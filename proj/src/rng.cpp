#include "kgd/rng.hpp"

#include <cmath>

namespace kgd {

double SplitRng::next_gaussian() {
  // Box-Muller on two fresh uniforms; u1 bounded away from zero.
  double u1 = 0.0;
  do {
    u1 = next_double();
  } while (u1 <= 0.0);
  double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace kgd
