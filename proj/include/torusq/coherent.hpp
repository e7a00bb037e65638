#pragma once

#include "torusq/torus_space.hpp"

namespace torusq {

/// Normalized Gaussian coherent state centered at (q0, p0) in [0,1)^2, with
/// symmetric position/momentum widths. The amplitudes are a periodized
/// Gaussian over `image_range` torus copies on each side:
///   <q_j|z> ~ sum_m exp(-pi N (q_j-q0+m)^2
///                       + 2 pi i N p0 (q_j-q0+m) - 2 pi i chi_p m)
/// Gaussian tails beyond three copies are below 1e-12 N for N >= 8.
CVector coherent_state(const TorusSpace& space, double q0, double p0,
                       int image_range = 3);

}  // namespace torusq
