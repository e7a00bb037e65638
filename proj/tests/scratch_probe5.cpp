// Probe: convention variants for the scar benchmark.
#include <iomanip>
#include <iostream>

#include "torusq/experiment.hpp"

using namespace torusq;

namespace {

// Coherent state with tunable aspect: exp(-pi N a dq^2 + 2 pi i N p0 dq).
CVector squeezed_state(const TorusSpace& s, double q0, double p0, double aspect) {
  const int n = s.dim();
  CVector psi(n);
  for (int j = 0; j < n; ++j) {
    Complex amp(0, 0);
    for (int m = -3; m <= 3; ++m) {
      const double dq = s.position(j) - q0 + m;
      amp += std::exp(-std::numbers::pi * n * aspect * dq * dq) *
             std::polar(1.0, kTwoPi * n * p0 * dq - kTwoPi * s.chi_p() * m);
    }
    psi(j) = amp;
  }
  psi.normalize();
  return psi;
}

double best_overlap_for(const TorusSpace& s, const Propagator& prop,
                        const std::vector<EigenPair>& pairs, const CVector& z0,
                        const CVector& z1, double window_denom, int T) {
  const CMatrix& m = prop.matrix.entries;
  const double beta1 = std::arg(z1.dot(m * z0));
  const double phi = beta1 + std::arg(z0.dot(m * z1));
  double best = 0;
  for (int mm = 0; mm < 2; ++mm) {
    const double theta = (phi + kTwoPi * mm) / 2.0;
    CVector pom = (z0 + std::polar(1.0, beta1 - theta) * z1).normalized();
    CVector sum = pom;
    CVector fwd = pom, bwd = pom;
    for (int t = 1; t <= T; ++t) {
      const double w = std::cos(std::numbers::pi * t / window_denom);
      fwd = m * fwd;
      bwd = m.adjoint() * bwd;
      sum += w * std::polar(1.0, -theta * t) * fwd;
      sum += w * std::polar(1.0, theta * t) * bwd;
    }
    sum.normalize();
    best = std::max(best, select_eigenstate_by_overlap(pairs, sum).overlap);
  }
  return best;
}

}  // namespace

int main() {
  std::cout << std::fixed << std::setprecision(4);

  // (1) periodic-sector baker (chi = 0 blocks), same construction
  {
    const int n = 100;
    TorusSpace s(n, 0.0, 0.0);
    TorusSpace h(n / 2, 0.0, 0.0);
    CMatrix f = fourier_matrix(s).entries;
    CMatrix fh = fourier_matrix(h).entries;
    CMatrix blk = CMatrix::Zero(n, n);
    blk.topLeftCorner(n / 2, n / 2) = fh;
    blk.bottomRightCorner(n / 2, n / 2) = fh;
    Propagator prop{{f.adjoint() * blk, "baker chi0"}, s, MapDescriptor::baker()};
    auto pairs = eigendecompose(prop);
    PeriodicOrbit orbit = baker_orbit_from_bits("01");
    CVector z0 = coherent_state(s, orbit.points[0].q.value(), orbit.points[0].p.value());
    CVector z1 = coherent_state(s, orbit.points[1].q.value(), orbit.points[1].p.value());
    std::cout << "chi=0 baker: best = "
              << best_overlap_for(s, prop, pairs, z0, z1, 12.0, 6) << "\n";
  }

  // (2) squeezing scan and (3) window denominator variants, antiperiodic baker
  {
    TorusSpace s(100, 0.5, 0.5);
    Propagator prop = quantize_baker(s);
    auto pairs = eigendecompose(prop);
    PeriodicOrbit orbit = baker_orbit_from_bits("01");
    const double q0 = orbit.points[0].q.value(), p0 = orbit.points[0].p.value();
    const double q1 = orbit.points[1].q.value(), p1 = orbit.points[1].p.value();
    for (double aspect : {0.4, 0.5, 0.7, 1.0, 1.5, 2.0, 2.5}) {
      CVector z0 = squeezed_state(s, q0, p0, aspect);
      CVector z1 = squeezed_state(s, q1, p1, aspect);
      std::cout << "aspect " << aspect << ": best = "
                << best_overlap_for(s, prop, pairs, z0, z1, 12.0, 6) << "\n";
    }
    CVector z0 = coherent_state(s, q0, p0);
    CVector z1 = coherent_state(s, q1, p1);
    const double t_real = 2.0 * std::log(100.0) / std::log(2.0);  // 13.29
    std::cout << "window denom 2*lnN/lambda, T=6: best = "
              << best_overlap_for(s, prop, pairs, z0, z1, t_real, 6) << "\n";
    std::cout << "window denom 2*lnN/lambda, T=7 (ceil): best = "
              << best_overlap_for(s, prop, pairs, z0, z1, t_real, 7) << "\n";
    std::cout << "T=7 floor-denom: best = "
              << best_overlap_for(s, prop, pairs, z0, z1, 14.0, 7) << "\n";
  }
  return 0;
}
