#include "torusq/torus_space.hpp"

#include <stdexcept>
#include <string>

namespace torusq {

TorusSpace::TorusSpace(int dimension, double chi_q, double chi_p)
    : n_(dimension), chi_q_(chi_q), chi_p_(chi_p) {
  if (dimension < 1) {
    throw std::invalid_argument("TorusSpace: invalid dimension N=" +
                                std::to_string(dimension) + ", must be >= 1");
  }
  if (chi_q < 0.0 || chi_q >= 1.0 || chi_p < 0.0 || chi_p >= 1.0) {
    throw std::invalid_argument("TorusSpace: Floquet angles must lie in [0,1)");
  }
}

TorusSpace build_space(int dimension, double chi_q, double chi_p) {
  return TorusSpace(dimension, chi_q, chi_p);
}

}  // namespace torusq
