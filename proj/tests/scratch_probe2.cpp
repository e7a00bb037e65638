// Probe: how much overlap with a single eigenstate is achievable from the
// span of propagated orbit coherent states (baker N=100, orbit "01").
#include <iostream>

#include <Eigen/QR>

#include "torusq/experiment.hpp"

using namespace torusq;

int main() {
  TorusSpace s(100, 0.5, 0.5);
  Propagator prop = quantize_baker(s);
  PeriodicOrbit orbit = baker_orbit_from_bits("01");
  auto pairs = eigendecompose(prop);
  const CMatrix& m = prop.matrix.entries;

  CVector z0 = coherent_state(s, orbit.points[0].q.value(), orbit.points[0].p.value());
  CVector z1 = coherent_state(s, orbit.points[1].q.value(), orbit.points[1].p.value());

  for (int T : {4, 6, 8}) {
    // Krylov space spanned by M^t z_0, M^t z_1, t = -T..T
    CMatrix basis(100, 2 * (2 * T + 1));
    int col = 0;
    for (CVector z : {z0, z1}) {
      CVector fwd = z, bwd = z;
      basis.col(col++) = z;
      for (int t = 1; t <= T; ++t) {
        fwd = m * fwd;
        bwd = m.adjoint() * bwd;
        basis.col(col++) = fwd;
        basis.col(col++) = bwd;
      }
    }
    Eigen::HouseholderQR<CMatrix> qr(basis);
    CMatrix q = qr.householderQ() * CMatrix::Identity(100, basis.cols());
    double best = 0;
    int best_i = -1;
    for (int i = 0; i < 100; ++i) {
      const double cap = (q.adjoint() * pairs[i].vector).norm();
      if (cap > best) {
        best = cap;
        best_i = i;
      }
    }
    std::cout << "T=" << T << " max Krylov capacity = " << best
              << " at eigenphase " << pairs[best_i].eigenphase << "\n";
    // capacity of the best eigenstate from the single windowed sum family:
    // scan coefficient phases is equivalent to projecting the eigenstate.
  }

  // Also: per-eigenstate weight of plain POM branches
  for (int mm : {0, 1}) {
    PomResult pom = periodic_orbit_mode(s, orbit, prop, mm);
    auto sel = select_eigenstate_by_overlap(pairs, pom.state);
    std::cout << "POM m=" << mm << " best eig overlap " << sel.overlap << "\n";
  }
  return 0;
}
