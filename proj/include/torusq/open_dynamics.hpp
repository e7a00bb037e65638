#pragma once

#include <functional>

#include <fftw3.h>

#include "torusq/quantum_maps.hpp"

namespace torusq {

struct DensityOperator {
  CMatrix matrix;
  TorusSpace space;
};

DensityOperator density_from_pure(const CVector& psi, const TorusSpace& space);
DensityOperator maximally_mixed(const TorusSpace& space);

/// Diffusive translation channel: translation probabilities c(j,k) from a
/// periodized Gaussian of width eps*N/(2 pi), normalized to sum 1, together
/// with the multipliers the channel applies to chord coefficients,
///   ctilde(a,b) = sum_{j,k} c(j,k) exp(2 pi i (k a - j b)/N).
struct NoiseChannel {
  double epsilon;
  RMatrix coefficients;
  RMatrix chord_multipliers;
  TorusSpace space;
};

NoiseChannel noise_channel(const TorusSpace& space, double epsilon);

/// Batched length-N Fourier transforms between a matrix and its expansion in
/// the translation-operator basis. Conjugating a translation T_{a,b} by the
/// unitary Kraus translations only multiplies it by a phase, so the channel
/// is diagonal in this basis and one application costs O(N^2 log N).
/// Owns FFTW plans and scratch buffers; not safe to share across threads.
class ChordTransform {
 public:
  explicit ChordTransform(const TorusSpace& space);
  ~ChordTransform();
  ChordTransform(const ChordTransform&) = delete;
  ChordTransform& operator=(const ChordTransform&) = delete;

  /// chord(a, b) = Tr(T_{a,b}^dag rho).
  CMatrix chord_coefficients(const CMatrix& rho) const;
  /// Inverse of chord_coefficients: rho = sum_{a,b} chord(a,b) T_{a,b}.
  CMatrix from_chord_coefficients(const CMatrix& chord) const;
  /// Multiplies the chord coefficients elementwise and returns the result in
  /// the position representation. The a-dependent scalar phases of the
  /// analysis and synthesis steps cancel, leaving bare diagonal transforms.
  CMatrix apply_chord_multipliers(const CMatrix& rho, const RMatrix& multipliers) const;

  const TorusSpace& space() const { return space_; }

 private:
  void run_backward() const;
  void run_forward() const;

  TorusSpace space_;
  Complex* buf_in_;
  Complex* buf_out_;
  fftw_plan forward_;
  fftw_plan backward_;
};

/// Reference channel application: the literal Kraus sum
/// sum_{j,k} c(j,k) K rho K^dag with K = sqrt(N) T_{j,k}. O(N^4); used as an
/// oracle against the chord path at small N.
DensityOperator apply_noise_kraus(const DensityOperator& rho, const NoiseChannel& ch);

/// Production channel application through the chord representation.
DensityOperator apply_noise_chord(const DensityOperator& rho, const NoiseChannel& ch,
                                  const ChordTransform& transform);
DensityOperator apply_noise_chord(const DensityOperator& rho, const NoiseChannel& ch);

/// One open-map step rho -> D_eps(M rho M^dag), in place.
void open_step(DensityOperator& rho, const Propagator& prop, const NoiseChannel& ch,
               const ChordTransform& transform);

/// Tr(rho^2).
double purity(const DensityOperator& rho);

/// sqrt(<psi|rho|psi>). Raises if the quadratic form is below -1e-10;
/// smaller negative roundoff is clamped to zero.
double fidelity(const CVector& psi, const DensityOperator& rho);

/// Evolves `steps` open-map iterations, calling on_step(t, rho) after each.
/// Every 10 steps rho is re-Hermitized and its smallest eigenvalue checked;
/// drift below -1e-8 raises instead of being truncated.
void evolve_open(DensityOperator& rho, const Propagator& prop, const NoiseChannel& ch,
                 int steps,
                 const std::function<void(int, const DensityOperator&)>& on_step = {});

}  // namespace torusq
