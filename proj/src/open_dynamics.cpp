#include "torusq/open_dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace torusq {

DensityOperator density_from_pure(const CVector& psi, const TorusSpace& space) {
  if (psi.size() != space.dim()) {
    throw std::invalid_argument("density_from_pure: dimension mismatch");
  }
  return {psi * psi.adjoint(), space};
}

DensityOperator maximally_mixed(const TorusSpace& space) {
  const int n = space.dim();
  return {CMatrix::Identity(n, n) / static_cast<double>(n), space};
}

NoiseChannel noise_channel(const TorusSpace& space, double epsilon) {
  if (epsilon <= 0.0) {
    throw std::invalid_argument("noise_channel: epsilon must be positive");
  }
  const int n = space.dim();
  const double sigma = epsilon * n / kTwoPi;
  const double inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);

  // One-dimensional periodized Gaussian; images added until they stop
  // contributing at 1e-16 relative.
  RVector line(n);
  for (int j = 0; j < n; ++j) {
    double total = std::exp(-static_cast<double>(j) * j * inv_two_sigma_sq);
    for (int image = 1;; ++image) {
      const double lo = static_cast<double>(j) - image * static_cast<double>(n);
      const double hi = static_cast<double>(j) + image * static_cast<double>(n);
      const double added = std::exp(-lo * lo * inv_two_sigma_sq) +
                           std::exp(-hi * hi * inv_two_sigma_sq);
      total += added;
      if (added <= 1e-16 * total) break;
    }
    line(j) = total;
  }
  line /= line.sum();

  NoiseChannel ch{epsilon, line * line.transpose(), RMatrix(n, n), space};

  // ctilde(a,b) = ghat(a) ghat(b): the two 1-D transforms coincide because
  // the line profile is even, which also makes them real.
  RVector ghat(n);
  for (int a = 0; a < n; ++a) {
    Complex sum(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      sum += line(k) * std::polar(1.0, kTwoPi * k * a / n);
    }
    ghat(a) = sum.real();
  }
  ch.chord_multipliers = ghat * ghat.transpose();
  return ch;
}

ChordTransform::ChordTransform(const TorusSpace& space) : space_(space) {
  const int n = space.dim();
  buf_in_ = reinterpret_cast<Complex*>(fftw_alloc_complex(n));
  buf_out_ = reinterpret_cast<Complex*>(fftw_alloc_complex(n));
  forward_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                              reinterpret_cast<fftw_complex*>(buf_out_),
                              FFTW_FORWARD, FFTW_ESTIMATE);
  backward_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                               reinterpret_cast<fftw_complex*>(buf_out_),
                               FFTW_BACKWARD, FFTW_ESTIMATE);
}

ChordTransform::~ChordTransform() {
  fftw_destroy_plan(forward_);
  fftw_destroy_plan(backward_);
  fftw_free(buf_in_);
  fftw_free(buf_out_);
}

void ChordTransform::run_forward() const { fftw_execute(forward_); }
void ChordTransform::run_backward() const { fftw_execute(backward_); }

namespace {

// The translation-basis expansion works diagonal by diagonal: for offset b
// the relevant data is d_b(c) = w(c,b) rho((c+b) mod N, c), where w is the
// Floquet wrap phase exp(2 pi i chi_q floor((c+b)/N)).
Complex wrap_phase(const TorusSpace& s, bool wrapped) {
  if (!wrapped || s.chi_q() == 0.0) return Complex(1.0, 0.0);
  return std::polar(1.0, kTwoPi * s.chi_q());
}

}  // namespace

CMatrix ChordTransform::chord_coefficients(const CMatrix& rho) const {
  const int n = space_.dim();
  if (rho.rows() != n || rho.cols() != n) {
    throw std::invalid_argument("chord_coefficients: dimension mismatch");
  }
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix chord(n, n);
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      const bool wrapped = c + b >= n;
      buf_in_[c] = wrap_phase(space_, wrapped) * rho((c + b) % n, c);
    }
    run_backward();
    for (int a = 0; a < n; ++a) {
      const double phase = std::numbers::pi * static_cast<double>(a) * b / n +
                           kTwoPi * a * space_.chi_q() / n;
      chord(a, b) = inv_sqrt_n * std::polar(1.0, phase) * buf_out_[a];
    }
  }
  return chord;
}

CMatrix ChordTransform::from_chord_coefficients(const CMatrix& chord) const {
  const int n = space_.dim();
  if (chord.rows() != n || chord.cols() != n) {
    throw std::invalid_argument("from_chord_coefficients: dimension mismatch");
  }
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix rho(n, n);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      const double phase = std::numbers::pi * static_cast<double>(a) * b / n +
                           kTwoPi * a * space_.chi_q() / n;
      buf_in_[a] = inv_sqrt_n * std::polar(1.0, -phase) * chord(a, b);
    }
    run_forward();
    for (int c = 0; c < n; ++c) {
      const bool wrapped = c + b >= n;
      rho((c + b) % n, c) = std::conj(wrap_phase(space_, wrapped)) * buf_out_[c];
    }
  }
  return rho;
}

CMatrix ChordTransform::apply_chord_multipliers(const CMatrix& rho,
                                                const RMatrix& multipliers) const {
  const int n = space_.dim();
  if (rho.rows() != n || rho.cols() != n || multipliers.rows() != n ||
      multipliers.cols() != n) {
    throw std::invalid_argument("apply_chord_multipliers: dimension mismatch");
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  CMatrix out(n, n);
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      const bool wrapped = c + b >= n;
      buf_in_[c] = wrap_phase(space_, wrapped) * rho((c + b) % n, c);
    }
    run_backward();
    for (int a = 0; a < n; ++a) buf_in_[a] = buf_out_[a] * multipliers(a, b);
    run_forward();
    for (int c = 0; c < n; ++c) {
      const bool wrapped = c + b >= n;
      out((c + b) % n, c) =
          std::conj(wrap_phase(space_, wrapped)) * buf_out_[c] * inv_n;
    }
  }
  return out;
}

DensityOperator apply_noise_kraus(const DensityOperator& rho, const NoiseChannel& ch) {
  if (!(rho.space == ch.space)) {
    throw std::invalid_argument("apply_noise_kraus: dimension mismatch");
  }
  const int n = rho.space.dim();
  CMatrix out = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const CMatrix kraus = unitary_translation(rho.space, j, k).entries;
      out += ch.coefficients(j, k) * (kraus * rho.matrix * kraus.adjoint());
    }
  }
  return {std::move(out), rho.space};
}

DensityOperator apply_noise_chord(const DensityOperator& rho, const NoiseChannel& ch,
                                  const ChordTransform& transform) {
  if (!(rho.space == ch.space) || !(rho.space == transform.space())) {
    throw std::invalid_argument("apply_noise_chord: dimension mismatch");
  }
  return {transform.apply_chord_multipliers(rho.matrix, ch.chord_multipliers),
          rho.space};
}

DensityOperator apply_noise_chord(const DensityOperator& rho, const NoiseChannel& ch) {
  ChordTransform transform(rho.space);
  return apply_noise_chord(rho, ch, transform);
}

void open_step(DensityOperator& rho, const Propagator& prop, const NoiseChannel& ch,
               const ChordTransform& transform) {
  if (!(rho.space == prop.space) || !(rho.space == ch.space)) {
    throw std::invalid_argument("open_step: dimension mismatch");
  }
  const CMatrix& m = prop.matrix.entries;
  rho.matrix = m * rho.matrix * m.adjoint();
  rho.matrix = transform.apply_chord_multipliers(rho.matrix, ch.chord_multipliers);
}

double purity(const DensityOperator& rho) {
  // Tr(rho^2) = sum_{i,j} rho_ij rho_ji without forming the product.
  return rho.matrix.cwiseProduct(rho.matrix.transpose()).sum().real();
}

double fidelity(const CVector& psi, const DensityOperator& rho) {
  if (psi.size() != rho.space.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const double value = (psi.adjoint() * rho.matrix * psi)(0, 0).real();
  if (value < -1e-10) {
    throw std::runtime_error("fidelity: positivity violation, <psi|rho|psi> = " +
                             std::to_string(value));
  }
  return std::sqrt(std::max(value, 0.0));
}

void evolve_open(DensityOperator& rho, const Propagator& prop, const NoiseChannel& ch,
                 int steps,
                 const std::function<void(int, const DensityOperator&)>& on_step) {
  if (steps < 0) throw std::invalid_argument("evolve_open: steps must be >= 0");
  ChordTransform transform(rho.space);
  for (int t = 1; t <= steps; ++t) {
    open_step(rho, prop, ch, transform);
    if (t % 10 == 0) {
      rho.matrix = 0.5 * (rho.matrix + rho.matrix.adjoint()).eval();
      Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix,
                                                    Eigen::EigenvaluesOnly);
      const double min_eig = solver.eigenvalues().minCoeff();
      if (min_eig < -1e-8) {
        throw std::runtime_error("evolve_open: positivity drift, min eigenvalue " +
                                 std::to_string(min_eig) + " at step " +
                                 std::to_string(t));
      }
    }
    if (on_step) on_step(t, rho);
  }
}

}  // namespace torusq
