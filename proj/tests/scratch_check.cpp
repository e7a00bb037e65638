// Temporary smoke checks for the core conventions; superseded by the suites.
#include <iostream>

#include "torusq/experiment.hpp"

using namespace torusq;

int main() {
  // 1. Commutation U^j V^k = V^k U^j exp(2 pi i j k/N), N=6, chi=1/2.
  {
    TorusSpace s(6, 0.5, 0.5);
    CMatrix u = position_shift(s).entries;
    CMatrix v = momentum_shift(s).entries;
    double worst = 0;
    CMatrix upow = CMatrix::Identity(6, 6);
    for (int j = 0; j < 6; ++j) {
      CMatrix vpow = CMatrix::Identity(6, 6);
      for (int k = 0; k < 6; ++k) {
        Complex phase = std::polar(1.0, kTwoPi * j * k / 6.0);
        worst = std::max(worst,
                         (upow * vpow - phase * vpow * upow).cwiseAbs().maxCoeff());
        vpow = vpow * v;
      }
      upow = upow * u;
    }
    std::cout << "commutation max dev = " << worst << "\n";
  }

  // 2. Translation closed form vs gemm product, plus T(0,0), T† = T(-j,-k).
  {
    TorusSpace s(5, 0.5, 0.5);
    CMatrix u = position_shift(s).entries;
    CMatrix v = momentum_shift(s).entries;
    double worst = 0;
    for (int j = -4; j <= 4; ++j) {
      for (int k = -4; k <= 4; ++k) {
        CMatrix vp = CMatrix::Identity(5, 5), up = CMatrix::Identity(5, 5);
        CMatrix vstep = j > 0 ? v : CMatrix(v.adjoint());
        CMatrix ustep = k > 0 ? u : CMatrix(u.adjoint());
        for (int i = 0; i < std::abs(j); ++i) vp = vp * vstep;
        for (int i = 0; i < std::abs(k); ++i) up = up * ustep;
        CMatrix ref = std::polar(1.0 / std::sqrt(5.0),
                                 std::numbers::pi * j * k / 5.0) *
                      vp * up;
        worst = std::max(worst, (translation(s, j, k).entries - ref).cwiseAbs().maxCoeff());
        worst = std::max(
            worst, (translation(s, j, k).entries.adjoint() -
                    translation(s, -j, -k).entries).cwiseAbs().maxCoeff());
      }
    }
    std::cout << "translation closed form dev = " << worst << "\n";
  }

  // 3. Exact Egorov for the cat map: M† Tu(j,k) M ~ Tu((j,k)A), A=[[2,1],[3,2]].
  {
    for (int n : {3, 5, 8}) {
      TorusSpace s(n, 0.0, 0.0);
      Propagator prop = quantize_cat(s);
      const CMatrix& m = prop.matrix.entries;
      double worst = 0;
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          CMatrix lhs = m.adjoint() * unitary_translation(s, j, k).entries * m;
          int jj = (2 * j + 3 * k) % n, kk = (j + 2 * k) % n;
          CMatrix rhs = unitary_translation(s, jj, kk).entries;
          int r0 = 0, c0 = 0;
          rhs.cwiseAbs().maxCoeff(&r0, &c0);
          Complex ratio = lhs(r0, c0) / rhs(r0, c0);
          worst = std::max(worst, std::abs(std::abs(ratio) - 1.0));
          worst = std::max(worst, (lhs - ratio * rhs).cwiseAbs().maxCoeff());
        }
      }
      std::cout << "egorov N=" << n << " dev = " << worst << "\n";
    }
  }

  // 4. Chord path == Kraus path, and chord round trip, N=8 both sectors.
  {
    for (double chi : {0.0, 0.5}) {
      TorusSpace s(8, chi, chi);
      NoiseChannel ch = noise_channel(s, 0.1);
      std::srand(7);
      CMatrix g = CMatrix::Random(8, 8);
      CMatrix rho_m = g * g.adjoint();
      rho_m /= rho_m.trace();
      DensityOperator rho{rho_m, s};
      DensityOperator a = apply_noise_kraus(rho, ch);
      DensityOperator b = apply_noise_chord(rho, ch);
      std::cout << "chi=" << chi << " chord vs kraus dev = "
                << (a.matrix - b.matrix).cwiseAbs().maxCoeff() << "\n";
      ChordTransform xf(s);
      CMatrix round = xf.from_chord_coefficients(xf.chord_coefficients(rho_m));
      std::cout << "chi=" << chi << " chord round trip dev = "
                << (round - rho_m).cwiseAbs().maxCoeff() << "\n";
      // Parseval
      double pur = purity(rho);
      double par = xf.chord_coefficients(rho_m).cwiseAbs2().sum();
      std::cout << "chi=" << chi << " parseval dev = " << std::abs(pur - par) << "\n";
    }
  }

  // 5. Wigner: reality is built in; check sum, translation covariance (2k,2j).
  {
    TorusSpace s(8, 0.5, 0.5);
    std::srand(11);
    CMatrix g = CMatrix::Random(8, 8);
    CMatrix rho_m = g * g.adjoint();
    rho_m /= rho_m.trace();
    DensityOperator rho{rho_m, s};
    PhaseSpaceGrid w = wigner(rho);
    std::cout << "wigner sum = " << w.values.sum() << "\n";
    int j = 3, k = 2;
    CMatrix t = unitary_translation(s, j, k).entries;
    DensityOperator moved{t * rho_m * t.adjoint(), s};
    PhaseSpaceGrid wm = wigner(moved);
    double worst = 0;
    int size = 16;
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        worst = std::max(worst,
                         std::abs(wm.values((a + 2 * k) % size, (b + 2 * j) % size) -
                                  w.values(a, b)));
    std::cout << "wigner shift (2k,2j) dev = " << worst << "\n";
    // overlap rule: sum W_rho W_sigma = kappa Tr(rho sigma)
    CMatrix g2 = CMatrix::Random(8, 8);
    CMatrix sig = g2 * g2.adjoint();
    sig /= sig.trace();
    PhaseSpaceGrid w2 = wigner({sig, s});
    double lhs = (w.values.cwiseProduct(w2.values)).sum();
    double tr = (rho_m * sig).trace().real();
    std::cout << "overlap kappa = " << lhs / tr << "\n";
  }
  // 6. Orientation: Wigner and Husimi of a coherent state, both sectors.
  {
    for (double chi : {0.0, 0.5}) {
      TorusSpace s(40, chi, chi);
      CVector z = coherent_state(s, 0.30, 0.70);
      DensityOperator rho = density_from_pure(z, s);
      PhaseSpaceGrid w = wigner(rho);
      int ar = 0, ac = 0;
      w.values.maxCoeff(&ar, &ac);
      std::cout << "chi=" << chi << " wigner sum = " << w.values.sum()
                << " peak at (" << ar / 80.0 << "," << ac / 80.0
                << ") neg = " << negativity(w) << "\n";
      PhaseSpaceGrid h = husimi(rho, 40);
      h.values.maxCoeff(&ar, &ac);
      std::cout << "chi=" << chi << " husimi peak at (" << ar / 40.0 << ","
                << ac / 40.0 << ")\n";
    }
  }

  // 7. Scar benchmark: baker N=100 orbit 01, best-branch overlap vs 0.828.
  {
    TorusSpace s(100, 0.5, 0.5);
    Propagator prop = quantize_baker(s);
    PeriodicOrbit orbit = baker_orbit_from_bits("01");
    ScarBranch branch = best_branch_scar(s, orbit, prop);
    std::cout << "baker 01 best branch m=" << branch.params.branch_m
              << " theta=" << branch.params.theta
              << " overlap=" << branch.overlap
              << " squared=" << branch.overlap * branch.overlap << "\n";
    PomResult pom = periodic_orbit_mode(s, orbit, prop, branch.params.branch_m);
    const CMatrix& m = prop.matrix.entries;
    Complex ret = pom.state.dot(m * (m * pom.state));
    std::cout << "pom quasi-eigenphase defect = "
              << std::abs(ret * std::polar(1.0, -2.0 * pom.params.theta) - 1.0)
              << "\n";
  }
  return 0;
}
