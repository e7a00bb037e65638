#pragma once

#include "torusq/coherent.hpp"
#include "torusq/open_dynamics.hpp"

namespace torusq {

/// Quantization data of a periodic-orbit mode: the per-step phase theta of
/// the mode under the propagator, the branch index that selected it, and the
/// Ehrenfest window used by the scar sum.
struct ScarParams {
  double theta = 0.0;       // in [0, 2 pi): M |POM> ~ exp(i theta) |POM>
  int branch_m = 0;         // in [0, L)
  int t_ehrenfest = 0;
};

/// floor(ln N / lambda), the number of map steps before a minimal wavepacket
/// spreads across the torus.
int ehrenfest_time(const TorusSpace& space, const MapDescriptor& map);

struct PomResult {
  CVector state;
  ScarParams params;
};

/// Periodic-orbit mode: a phased sum of coherent states over the orbit,
///   |POM> ~ sum_j exp(-i theta j) exp(i beta_j) |z(x_j)>,
/// where beta_j accumulates the one-step phases arg<z_{j}|M|z_{j-1}> along
/// the orbit and theta = (beta_L + 2 pi m)/L closes the loop exactly. With
/// these phases M|POM> ~ exp(i theta)|POM>, and restarting the orbit at a
/// different point changes the state only by a global phase.
PomResult periodic_orbit_mode(const TorusSpace& space, const PeriodicOrbit& orbit,
                              const Propagator& prop, int branch_m);

/// Cosine-windowed coherent sum of propagator iterates over the Ehrenfest
/// window: |scar> ~ sum_{t=-T..T} cos(pi t / 2T) exp(-i theta t) M^t |POM>,
/// normalized. T = 0 degenerates to the mode itself.
CVector scar_function(const CVector& pom_state, const ScarParams& params,
                      const Propagator& prop);

struct ScarBranch {
  CVector scar;
  CVector pom;
  ScarParams params;
  double overlap = 0.0;   // |<scar|eigenstate>| of the winning branch
  EigenPair eigenstate;
};

/// Builds the scar function for every branch m = 0..L-1 and keeps the one
/// with maximal overlap against any propagator eigenstate (ties to smaller m).
ScarBranch best_branch_scar(const TorusSpace& space, const PeriodicOrbit& orbit,
                            const Propagator& prop,
                            const std::vector<EigenPair>& pairs);
ScarBranch best_branch_scar(const TorusSpace& space, const PeriodicOrbit& orbit,
                            const Propagator& prop);

}  // namespace torusq
