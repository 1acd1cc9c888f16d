#include "wavefeas/constraints.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>

namespace wavefeas {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Stored-sample coordinate layout used for the regularity linear algebra:
// sample-major, entries row-major (a11 a12 a21 a22), real part then
// imaginary part.
int coord(int sample, int entry, int imag_part) {
  return 8 * sample + 2 * entry + imag_part;
}

std::vector<double> to_coords(const Ensemble& e) {
  std::vector<double> x(static_cast<std::size_t>(4 * e.samples()));
  for (int j = 0; j < e.half(); ++j) {
    const Mat2& u = e.free(j);
    const std::array<Complex, 4> entries{u.a11, u.a12, u.a21, u.a22};
    for (int k = 0; k < 4; ++k) {
      x[static_cast<std::size_t>(coord(j, k, 0))] = entries[static_cast<std::size_t>(k)].real();
      x[static_cast<std::size_t>(coord(j, k, 1))] = entries[static_cast<std::size_t>(k)].imag();
    }
  }
  return x;
}

Ensemble from_coords(const std::vector<double>& x, int samples) {
  std::vector<Mat2> free_half(static_cast<std::size_t>(samples / 2));
  for (int j = 0; j < samples / 2; ++j) {
    std::array<Complex, 4> entries;
    for (int k = 0; k < 4; ++k) {
      entries[static_cast<std::size_t>(k)] =
          Complex(x[static_cast<std::size_t>(coord(j, k, 0))],
                  x[static_cast<std::size_t>(coord(j, k, 1))]);
    }
    free_half[static_cast<std::size_t>(j)] = {entries[0], entries[1], entries[2], entries[3]};
  }
  return Ensemble(samples, std::move(free_half));
}

}  // namespace

// ---------------------------------------------------------------------------
// ProblemSpec
// ---------------------------------------------------------------------------

void ProblemSpec::validate() const {
  if (M < 4 || M % 2 != 0)
    throw std::invalid_argument("spec: M must be even and >= 4");
  if (D < 0 || 2 * D > M - 2)
    throw std::invalid_argument("spec: D must satisfy 0 <= D <= (M-2)/2");
  if (!(gamma > 0.0)) throw std::invalid_argument("spec: gamma must be positive");
  if (kind == ProblemKind::kSymmetric) {
    if (P < 1 || P > M - 2)
      throw std::invalid_argument(
          "spec: symmetry center P must lie strictly inside (0, M-1)");
  } else {
    if (P < 0 || P > M - 1)
      throw std::invalid_argument("spec: cardinality point P must lie in [0, M-1]");
  }
}

int ProblemSpec::harmonic() const {
  return phase == SymmetryPhase::kFourPi ? 2 * P : P;
}

// ---------------------------------------------------------------------------
// RegularityMap
// ---------------------------------------------------------------------------

RegularityMap::RegularityMap(int samples, int order) : M_(samples), D_(order) {
  alpha_.resize(static_cast<std::size_t>((D_ + 1) * M_));
  for (int l = 0; l <= D_; ++l) {
    for (int k = 0; k < M_; ++k) {
      Complex acc;
      for (int j = 0; j < M_; ++j) {
        acc += std::pow(static_cast<double>(j), l) *
               std::polar(1.0, -kTwoPi * k * j / M_);
      }
      alpha_[static_cast<std::size_t>(l * M_ + k)] = acc;
    }
  }

  // Real 2(D+1) x 4M matrix on the stored-sample coordinates.  Sample k of
  // the full view contributes through entry a12 for k < M/2 and through
  // entry a22 of its stored partner for k >= M/2 (the row swap moves the
  // second row up).
  rows_.assign(static_cast<std::size_t>(rows() * cols()), 0.0);
  auto at = [this](int row, int col) -> double& {
    return rows_[static_cast<std::size_t>(row * cols() + col)];
  };
  const int half = M_ / 2;
  for (int l = 0; l <= D_; ++l) {
    for (int k = 0; k < M_; ++k) {
      const Complex a = alpha(l, k);
      const int sample = k < half ? k : k - half;
      const int entry = k < half ? 1 : 3;  // a12 or a22
      const int re = coord(sample, entry, 0);
      const int im = coord(sample, entry, 1);
      at(2 * l, re) += a.real();
      at(2 * l, im) -= a.imag();
      at(2 * l + 1, re) += a.imag();
      at(2 * l + 1, im) += a.real();
    }
  }
}

std::vector<Complex> RegularityMap::values(const Ensemble& e) const {
  std::vector<Complex> out(static_cast<std::size_t>(D_ + 1));
  for (int l = 0; l <= D_; ++l) {
    Complex acc;
    for (int k = 0; k < M_; ++k) acc += alpha(l, k) * e.full(k).a12;
    out[static_cast<std::size_t>(l)] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parameter-free projections
// ---------------------------------------------------------------------------

Ensemble project_unitary(const Ensemble& e) {
  Ensemble out = e;
  out.free(0) = Mat2{1.0, 0.0, 0.0, phase_or_one(e.free(0).a22)};
  for (int j = 1; j < e.half(); ++j) out.free(j) = polar_unitary(e.free(j));
  return out;
}

Ensemble project_unitary_half_grid(const Ensemble& e) {
  Ensemble shifted = half_shift(e);
  for (int j = 0; j < shifted.half(); ++j)
    shifted.free(j) = polar_unitary(shifted.free(j));
  return half_shift_inverse(shifted);
}

Ensemble project_real(const Ensemble& e) {
  const int m = e.samples();
  Ensemble out = Ensemble::zero(m);
  for (int j = 0; j < e.half(); ++j) {
    const Mat2 mirrored = e.full((m - j) % m).conjugate();
    out.free(j) = 0.5 * (e.free(j) + mirrored);
  }
  return out;
}

ProductPoint project_diagonal(const ProductPoint& x) {
  Ensemble mean = 0.25 * (x.parts[0] + x.parts[1] + x.parts[2] + x.parts[3]);
  return diagonal_point(mean);
}

// ---------------------------------------------------------------------------
// ProblemProjections
// ---------------------------------------------------------------------------

ProblemProjections::ProblemProjections(ProblemSpec spec)
    : spec_(spec), reg_(spec.M, spec.D) {
  spec_.validate();

  // Factor the Gram matrix of the regularity rows once: the projection onto
  // the null space is x - A^T (A A^T)^-1 A x.
  const int m = reg_.rows();
  const int n = reg_.cols();
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      a(reg_.matrix().data(), m, n);
  const Eigen::MatrixXd gram = a * a.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double lam_max = es.eigenvalues().maxCoeff();
  const double lam_min = es.eigenvalues().minCoeff();
  if (lam_min < 1e-10 * lam_max)
    throw RankDeficiency("regularity rows are numerically dependent for this (M, D)");
  const Eigen::MatrixXd mover = a.transpose() * gram.llt().solve(
      Eigen::MatrixXd::Identity(m, m));  // n x m
  gram_solver_.resize(static_cast<std::size_t>(n * m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      gram_solver_[static_cast<std::size_t>(i * m + j)] = mover(i, j);

  const int half = spec_.M / 2;
  sym_phase_.resize(static_cast<std::size_t>(half + 1));
  card_target_.resize(static_cast<std::size_t>(half + 1));
  const int q = spec_.harmonic();
  for (int j = 0; j <= half; ++j) {
    sym_phase_[static_cast<std::size_t>(j)] =
        std::polar(1.0, kTwoPi * q * j / spec_.M);
    card_target_[static_cast<std::size_t>(j)] =
        std::polar(1.0, kTwoPi * spec_.P * j / spec_.M);
  }
  card_sign_ = spec_.P % 2 == 0 ? 1.0 : -1.0;
}

Ensemble ProblemProjections::project_regularity(const Ensemble& e) const {
  const int m = reg_.rows();
  const int n = reg_.cols();
  std::vector<double> x = to_coords(e);

  std::vector<double> residual(static_cast<std::size_t>(m), 0.0);
  const std::vector<double>& rows = reg_.matrix();
  for (int i = 0; i < m; ++i) {
    double acc = 0.0;
    for (int jj = 0; jj < n; ++jj)
      acc += rows[static_cast<std::size_t>(i * n + jj)] * x[static_cast<std::size_t>(jj)];
    residual[static_cast<std::size_t>(i)] = acc;
  }
  for (int i = 0; i < n; ++i) {
    double move = 0.0;
    for (int jj = 0; jj < m; ++jj)
      move += gram_solver_[static_cast<std::size_t>(i * m + jj)] *
              residual[static_cast<std::size_t>(jj)];
    x[static_cast<std::size_t>(i)] -= move;
  }
  return from_coords(x, spec_.M);
}

Ensemble ProblemProjections::project_regular_real(const Ensemble& e) const {
  return project_regularity(project_real(e));
}

Complex ProblemProjections::symmetry_defect(const Ensemble& e, int j) const {
  const Complex c = sym_phase_[static_cast<std::size_t>(j)];
  return e.full(j).a11 - c * e.full(spec_.M - j).a11;
}

Complex ProblemProjections::cardinality_defect(const Ensemble& e, int j) const {
  return e.full(j).a11 + card_sign_ * e.full(j + spec_.M / 2).a11 -
         card_target_[static_cast<std::size_t>(j)];
}

double ProblemProjections::max_shape_defect(const Ensemble& e) const {
  double worst = 0.0;
  for (int j = 1; j <= spec_.M / 2; ++j) {
    const double d = spec_.kind == ProblemKind::kSymmetric
                         ? std::abs(symmetry_defect(e, j))
                         : std::abs(cardinality_defect(e, j));
    worst = std::max(worst, d);
  }
  return worst;
}

Ensemble ProblemProjections::project_symmetry(const Ensemble& e) const {
  const int half = spec_.M / 2;
  const double gamma = spec_.gamma;
  Ensemble out = e;

  // Constraint j binds the pair (U_j[1,1], U_{M-j}[1,1]); in stored
  // coordinates those are a11 of sample j and a21 of sample M/2 - j, so the
  // constraints bind pairwise disjoint entries and the per-constraint
  // minimal corrections project onto the whole intersection at once.  The
  // defect map (du, dv) -> du - c dv composed with its adjoint is twice the
  // identity, hence the halved correction.
  for (int j = 1; j <= half; ++j) {
    const Complex c = sym_phase_[static_cast<std::size_t>(j)];
    Complex* u;
    Complex* v;
    if (j < half) {
      u = &out.free(j).a11;
      v = &out.free(half - j).a21;
    } else {
      // Self-paired index: the defect collapses to (1 - c) U_{M/2}[1,1].
      u = &out.free(0).a21;
      v = u;
    }
    if (u == v) {
      const double factor = std::abs(1.0 - c);
      const double dn = factor * std::abs(*u);
      if (dn <= gamma) continue;
      *u *= gamma / dn;
      continue;
    }
    const Complex d = *u - c * *v;
    const double dn = std::abs(d);
    if (dn <= gamma) continue;
    const Complex corr = (0.5 * (dn - gamma) / dn) * d;
    *u -= corr;
    *v += std::conj(c) * corr;
  }
  return out;
}

Ensemble ProblemProjections::project_cardinality(const Ensemble& e) const {
  const int half = spec_.M / 2;
  const double gamma = spec_.gamma;
  Ensemble out = e;
  for (int j = 1; j <= half; ++j) {
    // The two participating entries both live in stored samples: a11/a21 of
    // sample j below the half index, a21/a11 of sample 0 at it.
    Complex* u;
    Complex* v;
    if (j < half) {
      u = &out.free(j).a11;
      v = &out.free(j).a21;
    } else {
      u = &out.free(0).a21;
      v = &out.free(0).a11;
    }
    const Complex d =
        *u + card_sign_ * *v - card_target_[static_cast<std::size_t>(j)];
    const double dn = std::abs(d);
    if (dn <= gamma) continue;
    const Complex corr = (0.5 * (dn - gamma) / dn) * d;
    *u -= corr;
    *v -= card_sign_ * corr;
  }
  return out;
}

Ensemble ProblemProjections::project_shape(const Ensemble& e) const {
  return spec_.kind == ProblemKind::kSymmetric ? project_symmetry(e)
                                               : project_cardinality(e);
}

ProductPoint ProblemProjections::project_product(const ProductPoint& x) const {
  return ProductPoint{{project_unitary(x.parts[0]),
                       project_unitary_half_grid(x.parts[1]),
                       project_regular_real(x.parts[2]),
                       project_shape(x.parts[3])}};
}

}  // namespace wavefeas
