#include "torusq/scar.hpp"

#include <cmath>
#include <stdexcept>

namespace torusq {

int ehrenfest_time(const TorusSpace& space, const MapDescriptor& map) {
  if (space.dim() < 2) {
    throw std::invalid_argument("ehrenfest_time: N must be >= 2");
  }
  // The nudge keeps exact integer ratios (e.g. ln 8 / ln 2) from flooring down.
  return static_cast<int>(std::floor(std::log(static_cast<double>(space.dim())) /
                                         map.lyapunov +
                                     1e-9));
}

PomResult periodic_orbit_mode(const TorusSpace& space, const PeriodicOrbit& orbit,
                              const Propagator& prop, int branch_m) {
  const int length = orbit.period;
  if (branch_m < 0 || branch_m >= length) {
    throw std::invalid_argument("periodic_orbit_mode: branch index out of [0, L)");
  }
  if (!(space == prop.space)) {
    throw std::invalid_argument("periodic_orbit_mode: dimension mismatch");
  }

  std::vector<CVector> sites(length);
  for (int j = 0; j < length; ++j) {
    const PhasePoint x = orbit.points[j].value();
    sites[j] = coherent_state(space, x.q, x.p);
  }

  // Accumulated one-step phases along the orbit; beta.back() is the total
  // phase picked up over one full period.
  std::vector<double> beta(length + 1, 0.0);
  const CMatrix& m = prop.matrix.entries;
  for (int j = 1; j <= length; ++j) {
    const Complex amp = sites[j % length].dot(m * sites[j - 1]);
    beta[j] = beta[j - 1] + std::arg(amp);
  }
  double theta = (beta[length] + kTwoPi * branch_m) / length;
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;

  CVector pom = CVector::Zero(space.dim());
  for (int j = 0; j < length; ++j) {
    pom += std::polar(1.0, beta[j] - theta * j) * sites[j];
  }
  pom.normalize();

  return {std::move(pom),
          ScarParams{theta, branch_m, ehrenfest_time(space, prop.descriptor)}};
}

CVector scar_function(const CVector& pom_state, const ScarParams& params,
                      const Propagator& prop) {
  const int window = params.t_ehrenfest;
  if (window == 0) return pom_state;

  const CMatrix& m = prop.matrix.entries;
  CVector sum = pom_state;  // t = 0 term, weight cos(0) = 1
  CVector forward = pom_state;
  CVector backward = pom_state;
  for (int t = 1; t <= window; ++t) {
    const double weight = std::cos(std::numbers::pi * t / (2.0 * window));
    forward = m * forward;
    backward = m.adjoint() * backward;
    sum += weight * std::polar(1.0, -params.theta * t) * forward;
    sum += weight * std::polar(1.0, params.theta * t) * backward;
  }
  sum.normalize();
  return sum;
}

ScarBranch best_branch_scar(const TorusSpace& space, const PeriodicOrbit& orbit,
                            const Propagator& prop,
                            const std::vector<EigenPair>& pairs) {
  ScarBranch best;
  best.overlap = -1.0;
  for (int m = 0; m < orbit.period; ++m) {
    PomResult pom = periodic_orbit_mode(space, orbit, prop, m);
    CVector scar = scar_function(pom.state, pom.params, prop);
    SelectionResult sel = select_eigenstate_by_overlap(pairs, scar);
    if (sel.overlap > best.overlap) {
      best = {std::move(scar), std::move(pom.state), pom.params, sel.overlap,
              std::move(sel.pair)};
    }
  }
  return best;
}

ScarBranch best_branch_scar(const TorusSpace& space, const PeriodicOrbit& orbit,
                            const Propagator& prop) {
  return best_branch_scar(space, orbit, prop, eigendecompose(prop));
}

}  // namespace torusq
