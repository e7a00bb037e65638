#pragma once

#include "torusq/types.hpp"

namespace torusq {

/// Finite Hilbert space attached to the unit-square phase space with periodic
/// boundary phases (Floquet angles). The dimension N fixes the effective
/// Planck constant through 2*pi*hbar*N = 1.
class TorusSpace {
 public:
  TorusSpace(int dimension, double chi_q, double chi_p);

  int dim() const { return n_; }
  double chi_q() const { return chi_q_; }
  double chi_p() const { return chi_p_; }
  double hbar() const { return 1.0 / (kTwoPi * static_cast<double>(n_)); }

  /// Position grid value q_j = (j + chi_q)/N.
  double position(int j) const { return (j + chi_q_) / n_; }
  /// Momentum grid value p_k = (k + chi_p)/N.
  double momentum(int k) const { return (k + chi_p_) / n_; }

  friend bool operator==(const TorusSpace&, const TorusSpace&) = default;

 private:
  int n_;
  double chi_q_;
  double chi_p_;
};

TorusSpace build_space(int dimension, double chi_q, double chi_p);

}  // namespace torusq
