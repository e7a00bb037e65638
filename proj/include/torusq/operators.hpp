#pragma once

#include "torusq/torus_space.hpp"

namespace torusq {

/// Discrete Fourier transform from the position to the momentum basis.
/// Entry (k, j) is <p_k|q_j> = exp(-2 pi i (j+chi_q)(k+chi_p)/N) / sqrt(N).
OperatorMatrix fourier_matrix(const TorusSpace& space);

/// Cyclic position shift U: |q_j> -> |q_{j+1}> with wrap phase
/// exp(-2 pi i chi_q), so U^N = exp(-2 pi i chi_q) I. Diagonal in the
/// momentum basis.
OperatorMatrix position_shift(const TorusSpace& space);

/// Momentum-lattice shift V, diagonal in the position basis with entries
/// exp(-2 pi i (j+chi_q)/N). Together with U it satisfies
/// U^j V^k = V^k U^j exp(2 pi i j k / N).
OperatorMatrix momentum_shift(const TorusSpace& space);

/// Phase-space translation T_{j,k} = exp(i pi j k / N) V^j U^k / sqrt(N)
/// for arbitrary integers j, k. The set {T_{j,k}} for j,k in [0,N) is
/// orthonormal under Tr(A^dag B), and T_{j,k}^dag = T_{-j,-k}.
OperatorMatrix translation(const TorusSpace& space, int j, int k);

/// sqrt(N) T_{j,k}: the unitary translation used as a Kraus operator.
OperatorMatrix unitary_translation(const TorusSpace& space, int j, int k);

/// Phase-space inversion. Supported for the periodic (chi = 0) and
/// antiperiodic (chi = 1/2) sectors with equal Floquet angles:
///   chi = 0:   <q_j|R|q_k> = delta_{(j+k) mod N, 0}
///   chi = 1/2: <q_j|R|q_k> = delta_{(j+k+1) mod N, 0}
OperatorMatrix parity(const TorusSpace& space);

}  // namespace torusq
