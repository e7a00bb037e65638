#pragma once

#include <vector>

#include "torusq/classical_maps.hpp"
#include "torusq/operators.hpp"

namespace torusq {

/// Unitary one-step propagator of a quantized torus map.
struct Propagator {
  OperatorMatrix matrix;
  TorusSpace space;
  MapDescriptor descriptor;
};

struct EigenPair {
  double eigenphase = 0.0;  // in [0, 2 pi)
  CVector vector;
};

/// Quantized baker map M = F_N^dag diag(F_{N/2}, F_{N/2}) in the
/// antiperiodic sector. Requires even N and chi_q = chi_p = 1/2.
Propagator quantize_baker(const TorusSpace& space);

/// Quantized cat map M_{j,k} = exp(2 pi i (j^2 - j k + k^2)/N)/sqrt(N).
/// Requires chi_q = chi_p = 0.
Propagator quantize_cat(const TorusSpace& space);

/// Spectral decomposition of a unitary propagator. Pairs are sorted by
/// eigenphase and the vectors are orthonormal (Schur vectors of a normal
/// matrix), so degenerate eigenphases pose no conditioning problem.
std::vector<EigenPair> eigendecompose(const Propagator& prop);

struct SelectionResult {
  EigenPair pair;
  double overlap = 0.0;  // |<target|v>|, maximized over degenerate clusters
};

/// Picks the eigenstate with maximal overlap against `target`. Eigenphases
/// closer than 1e-8 are treated as one degenerate cluster and the overlap is
/// maximized over the cluster span; ties go to the smaller eigenphase.
SelectionResult select_eigenstate_by_overlap(const std::vector<EigenPair>& pairs,
                                             const CVector& target);

}  // namespace torusq
