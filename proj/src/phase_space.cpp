#include "torusq/phase_space.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "torusq/coherent.hpp"

namespace torusq {

namespace {

std::string format_g17(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (res.ec != std::errc()) throw std::runtime_error("format_g17 failed");
  return std::string(buf, res.ptr);
}

// Coherent-state columns for a block of grid points.
CMatrix coherent_block(const TorusSpace& s, int resolution, int first, int count) {
  CMatrix block(s.dim(), count);
  for (int i = 0; i < count; ++i) {
    const int flat = first + i;
    const double q = static_cast<double>(flat / resolution) / resolution;
    const double p = static_cast<double>(flat % resolution) / resolution;
    block.col(i) = coherent_state(s, q, p);
  }
  return block;
}

}  // namespace

namespace {

// Unnormalized inverse 2-D DFT, G(a,b) = sum_{u,v} P(u,v) e^{+2 pi i (ua+vb)/S}.
CMatrix inverse_dft_2d(const CMatrix& spectrum) {
  const int size = static_cast<int>(spectrum.rows());
  std::vector<Complex> buf(static_cast<size_t>(size) * size);
  for (int u = 0; u < size; ++u)
    for (int v = 0; v < size; ++v)
      buf[static_cast<size_t>(u) * size + v] = spectrum(u, v);
  fftw_plan plan = fftw_plan_dft_2d(size, size,
                                    reinterpret_cast<fftw_complex*>(buf.data()),
                                    reinterpret_cast<fftw_complex*>(buf.data()),
                                    FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  CMatrix out(size, size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      out(a, b) = buf[static_cast<size_t>(a) * size + b];
  return out;
}

}  // namespace

PhaseSpaceGrid wigner(const DensityOperator& rho) {
  const TorusSpace& s = rho.space;
  const int n = s.dim();
  ChordTransform xf(s);
  const CMatrix chord = xf.chord_coefficients(rho.matrix);

  // Band-limited symplectic Fourier transform of the chord coefficients over
  // the centered frequency window: each translation mode (m1, m2) contributes
  // exp(i pi (-m1 a + m2 b)/N) on the half-integer grid. For even N the two
  // Nyquist representatives m = +-N/2 each carry weight 1/sqrt(2), which
  // keeps the quadratic overlap rule exact. Frequencies outside the window
  // are absent, so localized states produce no alias images.
  const int lo = -(n / 2);
  const int hi = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  const Complex floquet = std::polar(1.0, kTwoPi * s.chi_q());
  auto sign_of = [](int m) { return (m % 2 != 0) ? -1.0 : 1.0; };

  CMatrix spectrum = CMatrix::Zero(2 * n, 2 * n);
  for (int m1 = lo; m1 <= hi; ++m1) {
    for (int m2 = lo; m2 <= hi; ++m2) {
      int j = m1, k = m2;
      Complex factor(1.0, 0.0);
      // T_{j-N,k} = (-1)^k exp(2 pi i chi_q) T_{j,k} and
      // T_{j,k-N} = (-1)^j exp(2 pi i chi_q) T_{j,k}.
      if (j < 0) {
        factor *= floquet * sign_of(k);
        j += n;
      }
      if (k < 0) {
        factor *= floquet * sign_of(j);
        k += n;
      }
      double weight = 1.0;
      if (n % 2 == 0 && std::abs(m1) == n / 2) weight /= std::sqrt(2.0);
      if (n % 2 == 0 && std::abs(m2) == n / 2) weight /= std::sqrt(2.0);
      const int u = ((-m1) % (2 * n) + 2 * n) % (2 * n);
      const int v = (m2 % (2 * n) + 2 * n) % (2 * n);
      spectrum(u, v) = weight * std::conj(factor) * chord(j, k);
    }
  }

  const CMatrix dense = inverse_dft_2d(spectrum);
  const double scale = std::sqrt(static_cast<double>(n)) / (4.0 * n * n);
  return {scale * dense.real(), GridKind::wigner};
}

PhaseSpaceGrid husimi(const DensityOperator& rho, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("husimi: resolution must be >= 2");
  }
  const TorusSpace& s = rho.space;
  const int total = resolution * resolution;
  constexpr int kChunk = 512;
  RMatrix grid(resolution, resolution);
  for (int first = 0; first < total; first += kChunk) {
    const int count = std::min(kChunk, total - first);
    const CMatrix block = coherent_block(s, resolution, first, count);
    const CMatrix image = rho.matrix * block;
    for (int i = 0; i < count; ++i) {
      const int flat = first + i;
      grid(flat / resolution, flat % resolution) =
          block.col(i).dot(image.col(i)).real();
    }
  }
  return {std::move(grid), GridKind::husimi};
}

PhaseSpaceGrid husimi(const CVector& psi, const TorusSpace& space, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("husimi: resolution must be >= 2");
  }
  const int total = resolution * resolution;
  constexpr int kChunk = 1024;
  RMatrix grid(resolution, resolution);
  for (int first = 0; first < total; first += kChunk) {
    const int count = std::min(kChunk, total - first);
    const CMatrix block = coherent_block(space, resolution, first, count);
    const CVector amps = block.adjoint() * psi;
    for (int i = 0; i < count; ++i) {
      const int flat = first + i;
      grid(flat / resolution, flat % resolution) = std::norm(amps(i));
    }
  }
  return {std::move(grid), GridKind::husimi};
}

double negativity(const PhaseSpaceGrid& grid) {
  if (grid.kind != GridKind::wigner) {
    throw std::invalid_argument("negativity: requires a Wigner grid");
  }
  return (-grid.values).cwiseMax(0.0).sum();
}

void write_csv(const PhaseSpaceGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  for (int r = 0; r < grid.values.rows(); ++r) {
    for (int c = 0; c < grid.values.cols(); ++c) {
      if (c) out << ',';
      out << format_g17(grid.values(r, c));
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

void write_pgm(const PhaseSpaceGrid& grid, const std::string& path) {
  write_pgm(grid, path, grid.values.minCoeff(), grid.values.maxCoeff());
}

void write_pgm(const PhaseSpaceGrid& grid, const std::string& path, double lo,
               double hi) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_pgm: cannot open " + path);
  out << "P2\n" << grid.values.cols() << ' ' << grid.values.rows() << "\n255\n";
  for (int r = 0; r < grid.values.rows(); ++r) {
    for (int c = 0; c < grid.values.cols(); ++c) {
      int pixel = 255;
      if (hi > lo) {
        const double v = std::clamp(grid.values(r, c), lo, hi);
        pixel = static_cast<int>(std::lround(255.0 * (hi - v) / (hi - lo)));
      }
      if (c) out << ' ';
      out << pixel;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_pgm: write failed for " + path);
}

}  // namespace torusq
