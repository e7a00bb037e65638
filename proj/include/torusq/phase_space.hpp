#pragma once

#include <string>

#include "torusq/open_dynamics.hpp"

namespace torusq {

enum class GridKind { wigner, husimi };

/// Real-valued distribution sampled over the unit phase-space square.
/// Wigner grids are 2N x 2N (half-integer steps); Husimi grids are square
/// with a caller-chosen resolution.
struct PhaseSpaceGrid {
  RMatrix values;
  GridKind kind;
};

/// Discrete Wigner function on the half-integer 2N x 2N grid: the band-limited
/// symplectic Fourier transform of the chord coefficients,
///   W(a,b) = sqrt(N)/(2N)^2 sum_m w(m) Tr(T_m^dag rho) e^{i pi (-m1 a + m2 b)/N}
/// over the centered translation modes |m1|,|m2| <= N/2 (Nyquist weight
/// w = 1/sqrt(2) for even N). W is real for Hermitian rho, sums to Tr(rho),
/// satisfies sum W_rho W_sigma = Tr(rho sigma)/(4N) exactly, and translating
/// the state by the unitary T_{j,k} shifts the grid cyclically by (2k, 2j).
PhaseSpaceGrid wigner(const DensityOperator& rho);

/// Husimi function H(q,p) = <z(q,p)|rho|z(q,p)> on a uniform
/// resolution x resolution grid, q = r/resolution, p = c/resolution.
PhaseSpaceGrid husimi(const DensityOperator& rho, int resolution);

/// Pure-state specialization, H(q,p) = |<z(q,p)|psi>|^2.
PhaseSpaceGrid husimi(const CVector& psi, const TorusSpace& space, int resolution);

/// Total negative mass sum max(0, -W) of a Wigner grid.
double negativity(const PhaseSpaceGrid& grid);

/// Row-major CSV with 17 significant digits.
void write_csv(const PhaseSpaceGrid& grid, const std::string& path);

/// 8-bit text PGM mapping min -> white, max -> black within the frame.
void write_pgm(const PhaseSpaceGrid& grid, const std::string& path);
/// Same, against a fixed [lo, hi] scale shared across frames.
void write_pgm(const PhaseSpaceGrid& grid, const std::string& path, double lo,
               double hi);

}  // namespace torusq
