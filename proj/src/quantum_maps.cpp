#include "torusq/quantum_maps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace torusq {

namespace {

double unitarity_residual(const CMatrix& m) {
  const int n = static_cast<int>(m.rows());
  return (m.adjoint() * m - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace

Propagator quantize_baker(const TorusSpace& space) {
  const int n = space.dim();
  if (n % 2 != 0) {
    throw std::invalid_argument("quantize_baker: N must be even, got " +
                                std::to_string(n));
  }
  if (space.chi_q() != 0.5 || space.chi_p() != 0.5) {
    throw std::invalid_argument(
        "quantize_baker: requires the antiperiodic sector chi_q = chi_p = 1/2");
  }
  const TorusSpace half(n / 2, 0.5, 0.5);
  const CMatrix f_full = fourier_matrix(space).entries;
  const CMatrix f_half = fourier_matrix(half).entries;
  CMatrix block = CMatrix::Zero(n, n);
  block.topLeftCorner(n / 2, n / 2) = f_half;
  block.bottomRightCorner(n / 2, n / 2) = f_half;
  CMatrix m = f_full.adjoint() * block;
  const double residual = unitarity_residual(m);
  if (residual >= 1e-12) {
    throw std::runtime_error("quantize_baker: unitarity residual " +
                             std::to_string(residual));
  }
  return {{std::move(m), "baker"}, space, MapDescriptor::baker()};
}

Propagator quantize_cat(const TorusSpace& space) {
  if (space.chi_q() != 0.0 || space.chi_p() != 0.0) {
    throw std::invalid_argument(
        "quantize_cat: requires the periodic sector chi_q = chi_p = 0");
  }
  const int n = space.dim();
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double quad = static_cast<double>(j) * j -
                          static_cast<double>(j) * k +
                          static_cast<double>(k) * k;
      m(j, k) = norm * std::polar(1.0, kTwoPi * quad / n);
    }
  }
  const double residual = unitarity_residual(m);
  if (residual >= 1e-12) {
    throw std::runtime_error("quantize_cat: unitarity residual " +
                             std::to_string(residual));
  }
  return {{std::move(m), "cat"}, space, MapDescriptor::cat()};
}

std::vector<EigenPair> eigendecompose(const Propagator& prop) {
  const CMatrix& m = prop.matrix.entries;
  const int n = static_cast<int>(m.rows());
  Eigen::ComplexSchur<CMatrix> schur(m, /*computeU=*/true);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("eigendecompose: Schur iteration failed to converge");
  }
  const CMatrix& basis = schur.matrixU();
  const CVector values = schur.matrixT().diagonal();

  // For a unitary (hence normal) matrix the Schur form is diagonal up to
  // roundoff, so the Schur vectors are orthonormal eigenvectors.
  const CMatrix residual = m * basis - basis * values.asDiagonal();
  std::vector<EigenPair> pairs(n);
  for (int i = 0; i < n; ++i) {
    const double r = residual.col(i).norm();
    if (r >= 1e-10) {
      throw std::runtime_error("eigendecompose: eigenpair residual " +
                               std::to_string(r) + " at index " +
                               std::to_string(i));
    }
    double phase = std::arg(values(i));
    if (phase < 0.0) phase += kTwoPi;
    pairs[i] = {phase, basis.col(i)};
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const EigenPair& a, const EigenPair& b) {
                     return a.eigenphase < b.eigenphase;
                   });
  return pairs;
}

SelectionResult select_eigenstate_by_overlap(const std::vector<EigenPair>& pairs,
                                             const CVector& target) {
  if (pairs.empty()) {
    throw std::invalid_argument("select_eigenstate_by_overlap: empty eigenpair list");
  }
  constexpr double kClusterTol = 1e-8;

  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    if (!clusters.empty() &&
        pairs[i].eigenphase - pairs[clusters.back().back()].eigenphase < kClusterTol) {
      clusters.back().push_back(i);
    } else {
      clusters.push_back({i});
    }
  }
  // A phase just below 2 pi is degenerate with one just above 0.
  if (clusters.size() >= 2) {
    const double wrap_gap = pairs[clusters.front().front()].eigenphase + kTwoPi -
                            pairs[clusters.back().back()].eigenphase;
    if (wrap_gap < kClusterTol) {
      for (int idx : clusters.back()) clusters.front().push_back(idx);
      clusters.pop_back();
    }
  }

  int best_cluster = -1;
  double best_overlap = -1.0;
  for (int c = 0; c < static_cast<int>(clusters.size()); ++c) {
    double sq = 0.0;
    for (int idx : clusters[c]) {
      sq += std::norm(pairs[idx].vector.dot(target));
    }
    const double overlap = std::sqrt(sq);
    if (overlap > best_overlap) {
      best_overlap = overlap;
      best_cluster = c;
    }
  }

  const std::vector<int>& chosen = clusters[best_cluster];
  CVector projected = CVector::Zero(target.size());
  for (int idx : chosen) {
    projected += pairs[idx].vector * pairs[idx].vector.dot(target);
  }
  const double norm = projected.norm();
  if (norm > 0.0) {
    projected /= norm;
  } else {
    projected = pairs[chosen.front()].vector;
  }
  return {{pairs[chosen.front()].eigenphase, std::move(projected)}, best_overlap};
}

}  // namespace torusq
