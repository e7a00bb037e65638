#include "torusq/coherent.hpp"

#include <cmath>
#include <stdexcept>

namespace torusq {

CVector coherent_state(const TorusSpace& space, double q0, double p0,
                       int image_range) {
  if (q0 < 0.0 || q0 >= 1.0 || p0 < 0.0 || p0 >= 1.0) {
    throw std::invalid_argument("coherent_state: center must lie in [0,1)^2");
  }
  const int n = space.dim();
  const double dn = static_cast<double>(n);
  CVector psi(n);
  for (int j = 0; j < n; ++j) {
    Complex amp(0.0, 0.0);
    for (int m = -image_range; m <= image_range; ++m) {
      const double dq = space.position(j) - q0 + m;
      const double gauss = std::exp(-std::numbers::pi * dn * dq * dq);
      const double phase = kTwoPi * dn * p0 * dq - kTwoPi * space.chi_p() * m;
      amp += gauss * std::polar(1.0, phase);
    }
    psi(j) = amp;
  }
  psi.normalize();
  return psi;
}

}  // namespace torusq
