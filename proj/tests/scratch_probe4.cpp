// Probe: eigenphase ladder structure of orbit-localized baker eigenstates.
#include <iomanip>
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

  PomResult pom0 = periodic_orbit_mode(s, orbit, prop, 0);
  PomResult pom1 = periodic_orbit_mode(s, orbit, prop, 1);

  // Krylov capacities (T=6)
  int T = 6;
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

  std::cout << "theta candidates: m0 = " << pom0.params.theta
            << "  m1 = " << pom1.params.theta << "\n";
  std::cout << std::fixed << std::setprecision(4);
  for (int i = 0; i < 100; ++i) {
    const double cap = (q.adjoint() * pairs[i].vector).norm();
    const double o0 = std::abs(pairs[i].vector.dot(pom0.state));
    const double o1 = std::abs(pairs[i].vector.dot(pom1.state));
    const double oz = std::abs(pairs[i].vector.dot(z0));
    if (cap > 0.35 || o0 > 0.25 || o1 > 0.25) {
      std::cout << "phase " << pairs[i].eigenphase << "  cap " << cap << "  |<v|POM0>| "
                << o0 << "  |<v|POM1>| " << o1 << "  |<v|z0>| " << oz << "\n";
    }
  }
  return 0;
}
