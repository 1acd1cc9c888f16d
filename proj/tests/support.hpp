#pragma once

// Shared helpers and independent oracles for the test suites.  Everything
// here deliberately avoids the projection code paths it is used to check:
// set members come from direct constructions or Eigen least-squares/kernel
// computations on probed constraint matrices.

#include <Eigen/Dense>

#include <functional>
#include <numbers>
#include <vector>

#include "wavefeas/constraints.hpp"
#include "wavefeas/rng.hpp"

namespace wavefeas::test {

inline constexpr double kPi = std::numbers::pi;

// 2-D point as a single complex coordinate.
inline HPoint pt(double x, double y) { return HPoint{Complex(x, y)}; }

// Projector onto the line through the origin at the given angle.
inline std::function<HPoint(const HPoint&)> line_projector(double theta) {
  return [theta](const HPoint& p) {
    const double c = std::cos(theta), s = std::sin(theta);
    const double t = p[0].real() * c + p[0].imag() * s;
    return HPoint{Complex(t * c, t * s)};
  };
}

// Haar-type ensemble: samples of H = (1 + e^{2 pi i xi})/2,
// G = (1 - e^{2 pi i xi})/2 on the M-point grid.
inline Ensemble haar_ensemble(int m = 6) {
  auto h = [](double xi) {
    return 0.5 * (1.0 + std::polar(1.0, 2.0 * kPi * xi));
  };
  auto g = [](double xi) {
    return 0.5 * (1.0 - std::polar(1.0, 2.0 * kPi * xi));
  };
  std::vector<Mat2> stored(static_cast<std::size_t>(m / 2));
  for (int j = 0; j < m / 2; ++j) {
    const double xi = static_cast<double>(j) / m;
    stored[static_cast<std::size_t>(j)] =
        Mat2{h(xi), g(xi), h(xi + 0.5), g(xi + 0.5)};
  }
  return Ensemble(m, std::move(stored));
}

// Ensemble whose samples follow U_j = e^{2 pi i j / M} X with the row swap
// of X equal to -X, so the single-frequency sequence stays consistent.
inline Ensemble single_frequency_ensemble(int m = 6) {
  const Mat2 x{1.0, 2.0, -1.0, -2.0};
  std::vector<Mat2> stored(static_cast<std::size_t>(m / 2));
  for (int j = 0; j < m / 2; ++j)
    stored[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * kPi * j / m) * x;
  return Ensemble(m, std::move(stored));
}

// Uniformly random 2x2 unitary: unit quaternion -> SU(2), times a phase.
inline Mat2 random_unitary(Rng& rng) {
  double w = rng.normal(), x = rng.normal(), y = rng.normal(), z = rng.normal();
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n; x /= n; y /= n; z /= n;
  const Mat2 su{Complex(w, x), Complex(y, z), Complex(-y, z), Complex(w, -x)};
  return std::polar(1.0, 2.0 * kPi * rng.uniform()) * su;
}

inline HPoint random_hpoint(Rng& rng, std::size_t dim) {
  std::vector<Complex> coords(dim);
  for (auto& c : coords) c = {rng.normal(), rng.normal()};
  return HPoint(std::move(coords));
}

// ---------------------------------------------------------------------------
// Stored-coordinate packing (real vector of dimension 4M) shared by the
// Eigen-based oracles.  The layout matches nothing in the library's public
// surface; only consistency within this header matters.
// ---------------------------------------------------------------------------

inline Eigen::VectorXd pack(const Ensemble& e) {
  Eigen::VectorXd x(8 * e.half());
  for (int j = 0; j < e.half(); ++j) {
    const Mat2& u = e.free(j);
    const Complex entries[4] = {u.a11, u.a12, u.a21, u.a22};
    for (int k = 0; k < 4; ++k) {
      x[8 * j + 2 * k] = entries[k].real();
      x[8 * j + 2 * k + 1] = entries[k].imag();
    }
  }
  return x;
}

inline Ensemble unpack(const Eigen::VectorXd& x, int m) {
  std::vector<Mat2> stored(static_cast<std::size_t>(m / 2));
  for (int j = 0; j < m / 2; ++j) {
    stored[static_cast<std::size_t>(j)] =
        Mat2{{x[8 * j], x[8 * j + 1]},
             {x[8 * j + 2], x[8 * j + 3]},
             {x[8 * j + 4], x[8 * j + 5]},
             {x[8 * j + 6], x[8 * j + 7]}};
  }
  return Ensemble(m, std::move(stored));
}

// Matrix of a linear map on ensembles obtained by probing coordinate basis
// vectors, plus the constant term; exact for affine maps.
inline std::pair<Eigen::MatrixXd, Eigen::VectorXd> linearize(
    const std::function<Eigen::VectorXd(const Ensemble&)>& f, int m) {
  const int n = 4 * m;
  const Eigen::VectorXd b = f(Ensemble::zero(m));
  Eigen::MatrixXd a(b.size(), n);
  for (int c = 0; c < n; ++c) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[c] = 1.0;
    a.col(c) = f(unpack(e, m)) - b;
  }
  return {a, b};
}

// Least-squares oracle: the nearest solution of A x = rhs to x0 (exact
// affine-subspace projection via a rank-revealing decomposition).  The
// stored-coordinate Euclidean metric is a uniform multiple of the ensemble
// metric, so nearest points agree.
inline Eigen::VectorXd affine_project(const Eigen::MatrixXd& a,
                                      const Eigen::VectorXd& rhs,
                                      const Eigen::VectorXd& x0) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  return x0 - cod.pseudoInverse() * (a * x0 - rhs);
}

// Orthonormal kernel basis of a.
inline Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& a) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(1e-10);
  return lu.kernel();
}

}  // namespace wavefeas::test
