#pragma once

#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Dense>

namespace torusq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Complex matrix tagged with a human-readable label for diagnostics.
struct OperatorMatrix {
  CMatrix entries;
  std::string label;
};

}  // namespace torusq
