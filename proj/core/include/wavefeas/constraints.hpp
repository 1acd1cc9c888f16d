#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wavefeas/ensemble.hpp"

namespace wavefeas {

/// Thrown when the regularity Gram matrix is numerically rank deficient,
/// i.e. the chosen (M, D) produces redundant moment rows.
struct RankDeficiency : std::runtime_error {
  explicit RankDeficiency(const std::string& what) : std::runtime_error(what) {}
};

enum class ProblemKind { kSymmetric, kCardinal };

/// Phase family used by the near-symmetry constraint.  The defect at
/// constraint index j is the scalar
///   U_j[1,1] - e^{2 pi i q j / M} U_{M-j}[1,1],
/// the scaling-filter component of the symmetry identity (conjugation by
/// diag(-1,1) leaves that entry untouched).  The harmonic index q fixes the
/// symmetry center of the filter:
///
///   kFourPi (default): q = 2P, near-symmetry about x = P.
///   kTwoPi:            q = P,  near-symmetry about x = P/2.
///
/// Extending the bound to the remaining matrix entries would force the
/// wavelet row into the same phase family, and no 6-tap orthogonal filter
/// with the default regularity gets that combined defect under ~1; the
/// scalar constraint is the one a small slack value can meet.
enum class SymmetryPhase { kFourPi, kTwoPi };

struct ProblemSpec {
  int M = 6;           ///< sample count, even and >= 4
  int D = 1;           ///< regularity order (vanishing derivatives)
  double gamma = 0.5;  ///< near-symmetry / near-cardinality slack, > 0
  int P = 2;           ///< symmetry center / cardinality point
  ProblemKind kind = ProblemKind::kSymmetric;
  SymmetryPhase phase = SymmetryPhase::kFourPi;

  /// Throws std::invalid_argument when any field is out of range.
  void validate() const;

  /// Harmonic index q of the symmetry phase family (see SymmetryPhase).
  int harmonic() const;
};

// ---------------------------------------------------------------------------
// Regularity functionals.
// ---------------------------------------------------------------------------

/// The D+1 complex-linear moment functionals whose common null space is the
/// regularity set:
///   L_l(E) = sum_{k=0}^{M-1} alpha_{l k} U_k[1,2],
///   alpha_{l k} = sum_{j=0}^{M-1} j^l e^{-2 pi i k j / M}.
/// Also exposed as a real matrix of shape 2(D+1) x 4M acting on the stored
/// samples (row-major entries, re/im interleaved).
class RegularityMap {
 public:
  RegularityMap(int samples, int order);

  int order() const { return D_; }
  int samples() const { return M_; }
  int rows() const { return 2 * (D_ + 1); }
  int cols() const { return 4 * M_; }

  /// Row-major 2(D+1) x 4M real matrix.
  const std::vector<double>& matrix() const { return rows_; }

  /// Functional values L_0(E) .. L_D(E).
  std::vector<Complex> values(const Ensemble& e) const;

  /// alpha_{l k} table (l in 0..D, k in 0..M-1).
  Complex alpha(int l, int k) const {
    return alpha_[static_cast<std::size_t>(l * M_ + k)];
  }

 private:
  int M_ = 0;
  int D_ = 0;
  std::vector<Complex> alpha_;
  std::vector<double> rows_;
};

// ---------------------------------------------------------------------------
// Projections independent of the problem parameters.
// ---------------------------------------------------------------------------

/// Nearest ensemble whose samples are all unitary with first sample of the
/// form diag(1, z), |z| = 1.
Ensemble project_unitary(const Ensemble& e);

/// Nearest ensemble whose half-grid resamples are all unitary: conjugation
/// of the per-sample polar projection by the half-shift isometry.
Ensemble project_unitary_half_grid(const Ensemble& e);

/// Nearest ensemble with U_j = conj(U_{M-j}): the average with its
/// conjugate-reversal, an exact subspace projection.
Ensemble project_real(const Ensemble& e);

/// Every part replaced by the mean of the four parts (projection onto the
/// diagonal subspace of the product space).
ProductPoint project_diagonal(const ProductPoint& x);

/// Reflector 2 P - Id of an arbitrary projection callable.
template <class Proj, VectorPoint V>
V reflect(Proj&& project, const V& x) {
  return 2.0 * project(x) - x;
}

// ---------------------------------------------------------------------------
// Projections bound to a ProblemSpec.
// ---------------------------------------------------------------------------

/// Projection machinery for one feasibility problem.  The regularity Gram
/// factorization and the phase tables are computed once at construction and
/// shared by all calls; instances are immutable and safe to use from many
/// threads.
class ProblemProjections {
 public:
  explicit ProblemProjections(ProblemSpec spec);

  const ProblemSpec& spec() const { return spec_; }
  const RegularityMap& regularity() const { return reg_; }

  /// Orthogonal projection onto the null space of the regularity
  /// functionals.  Construction throws RankDeficiency if the Gram matrix of
  /// the functionals has a singular value below 1e-10 times the largest.
  Ensemble project_regularity(const Ensemble& e) const;

  /// Projection onto regularity AND realness: project_real then
  /// project_regularity, which lands on the intersection because the
  /// regularity projection maps the realness subspace into itself.
  Ensemble project_regular_real(const Ensemble& e) const;

  /// Projection onto the near-symmetry or near-cardinality ball family,
  /// depending on spec().kind.
  Ensemble project_shape(const Ensemble& e) const;

  /// Componentwise product projection: (unitary, half-grid unitary,
  /// regular+real, shape) applied to the four parts.
  ProductPoint project_product(const ProductPoint& x) const;

  /// Symmetry defect U_j[1,1] - c_j U_{M-j}[1,1] at constraint index j in
  /// 1..M/2, with c_j from the spec's phase family.
  Complex symmetry_defect(const Ensemble& e, int j) const;

  /// Cardinality defect U_j[1,1] + (-1)^P U_{j+M/2}[1,1] - e^{2 pi i P j / M}
  /// at constraint index j in 1..M/2 (indices mod M).
  Complex cardinality_defect(const Ensemble& e, int j) const;

  /// Largest shape-constraint defect over j = 1..M/2.
  double max_shape_defect(const Ensemble& e) const;

 private:
  Ensemble project_symmetry(const Ensemble& e) const;
  Ensemble project_cardinality(const Ensemble& e) const;

  ProblemSpec spec_;
  RegularityMap reg_;
  std::vector<double> gram_solver_;    // 4M x 2(D+1), maps A x to the move
  std::vector<Complex> sym_phase_;     // c_j, j = 0..M/2
  std::vector<Complex> card_target_;   // e^{2 pi i P j / M}, j = 0..M/2
  double card_sign_ = 1.0;             // (-1)^P
};

}  // namespace wavefeas
