// Probe: acceptance 7/8/9 behavior end to end.
#include <iomanip>
#include <iostream>

#include "torusq/experiment.hpp"

using namespace torusq;

int main() {
  std::cout << std::fixed << std::setprecision(5);

  // Criterion 7: ordering for baker "01" and cat period-3 canonical orbit.
  for (const char* which : {"baker", "cat"}) {
    ExperimentConfig cfg;
    cfg.map = std::string(which) == "baker" ? MapKind::baker : MapKind::cat;
    cfg.dimension = 100;
    cfg.epsilon = 0.1;
    cfg.steps = 8;
    cfg.initial = InitialKind::scar;
    cfg.orbit_code = "01";
    cfg.orbit_period = 3;
    cfg.orbit_index = 0;
    cfg.outdir = "/tmp/probe7_" + std::string(which);
    ComparisonResult res = run_comparison(cfg);
    std::cout << which << ": overlap_abs=" << res.overlap_abs << "\n";
    for (const auto& r : res.records) {
      std::cout << "  t=" << r.time << " P(eig,pom,scar)=(" << r.purity_eig << ","
                << r.purity_pom << "," << r.purity_scar << ") F=("
                << r.fidelity_eig << "," << r.fidelity_pom << ","
                << r.fidelity_scar << ")"
                << (r.time >= 2 && (r.purity_scar <= r.purity_eig ||
                                    r.fidelity_scar <= r.fidelity_eig)
                        ? "  <-- ORDERING VIOLATION"
                        : "")
                << "\n";
    }
  }

  // Criterion 8: cat-superposition negativity under pure noise.
  {
    TorusSpace s(100, 0.0, 0.0);
    CVector psi = (coherent_state(s, 0.35, 0.35) + coherent_state(s, 0.65, 0.65))
                      .normalized();
    for (double eps : {0.05, 0.1}) {
      NoiseChannel ch = noise_channel(s, eps);
      ChordTransform xf(s);
      DensityOperator rho = density_from_pure(psi, s);
      std::cout << "eps=" << eps << " negativity:";
      std::cout << " " << negativity(wigner(rho));
      for (int t = 1; t <= 4; ++t) {
        rho = apply_noise_chord(rho, ch, xf);
        std::cout << " " << negativity(wigner(rho));
      }
      std::cout << "\n";
    }
  }

  // Criterion 9: coupling regimes.
  {
    TorusSpace s(100, 0.5, 0.5);
    Propagator prop = quantize_baker(s);
    ScarBranch b = best_branch_scar(s, baker_orbit_from_bits("01"), prop);
    for (double eps : {1e-3, 1.5}) {
      NoiseChannel ch = noise_channel(s, eps);
      DensityOperator rho = density_from_pure(b.scar, s);
      std::cout << "eps=" << eps << " purity:";
      evolve_open(rho, prop, ch, 5, [&](int, const DensityOperator& r) {
        std::cout << " " << purity(r);
      });
      std::cout << "\n";
    }
  }
  return 0;
}
