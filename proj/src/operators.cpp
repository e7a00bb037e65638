#include "torusq/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace torusq {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

OperatorMatrix fourier_matrix(const TorusSpace& space) {
  const int n = space.dim();
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix f(n, n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const double phase =
          -kTwoPi * (j + space.chi_q()) * (k + space.chi_p()) / n;
      f(k, j) = norm * std::polar(1.0, phase);
    }
  }
  return {f, "F_" + std::to_string(n)};
}

OperatorMatrix position_shift(const TorusSpace& space) {
  const int n = space.dim();
  CMatrix u = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const Complex amp = (j == n - 1)
                            ? std::polar(1.0, -kTwoPi * space.chi_q())
                            : Complex(1.0, 0.0);
    u((j + 1) % n, j) = amp;
  }
  return {u, "U"};
}

OperatorMatrix momentum_shift(const TorusSpace& space) {
  const int n = space.dim();
  CMatrix v = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    v(j, j) = std::polar(1.0, -kTwoPi * (j + space.chi_q()) / n);
  }
  return {v, "V"};
}

OperatorMatrix translation(const TorusSpace& space, int j, int k) {
  const int n = space.dim();
  const Complex scalar =
      std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                 std::numbers::pi * static_cast<double>(j) *
                     static_cast<double>(k) / n);
  CMatrix t = CMatrix::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    const int wraps = floor_div(m + k, n);
    const int r = m + k - wraps * n;
    // V^j diagonal phase at row r times the U^k wrap phase.
    const double phase =
        -kTwoPi * (j * (r + space.chi_q()) / n + space.chi_q() * wraps);
    t(r, m) = scalar * std::polar(1.0, phase);
  }
  return {t,
          "T(" + std::to_string(j) + "," + std::to_string(k) + ")"};
}

OperatorMatrix unitary_translation(const TorusSpace& space, int j, int k) {
  OperatorMatrix t = translation(space, j, k);
  t.entries *= std::sqrt(static_cast<double>(space.dim()));
  t.label = "sqrtN*" + t.label;
  return t;
}

OperatorMatrix parity(const TorusSpace& space) {
  const int n = space.dim();
  CMatrix r = CMatrix::Zero(n, n);
  if (space.chi_q() == 0.0 && space.chi_p() == 0.0) {
    for (int m = 0; m < n; ++m) r((n - m) % n, m) = 1.0;
  } else if (space.chi_q() == 0.5 && space.chi_p() == 0.5) {
    for (int m = 0; m < n; ++m) r(n - 1 - m, m) = 1.0;
  } else {
    throw std::invalid_argument(
        "parity: only the chi=(0,0) and chi=(1/2,1/2) sectors are supported");
  }
  return {r, "R"};
}

}  // namespace torusq
