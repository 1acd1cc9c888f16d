#pragma once

#include <string>
#include <vector>

#include "wavefeas/constraints.hpp"

namespace wavefeas {

/// Thrown by extract_filters() when the coefficient rows do not carry the
/// alternating-sign structure implied by the half-shift relation.
struct StructureViolation : std::runtime_error {
  explicit StructureViolation(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown by cascade() when the iteration blows up (non-convergent filter).
struct Divergence : std::runtime_error {
  explicit Divergence(const std::string& what) : std::runtime_error(what) {}
};

/// Scaling filter h and wavelet filter g, M taps each.  Filters extracted
/// from a feasible ensemble are real to residual level and have sum(h) = 1.
struct FilterPair {
  std::vector<Complex> h;
  std::vector<Complex> g;

  int taps() const { return static_cast<int>(h.size()); }
};

/// Reads the filter taps off the ensemble's coefficient sequence
/// (h_k and g_k are the first row of coefficient k) after checking the
/// alternating second-row structure to 1e-10.
FilterPair extract_filters(const Ensemble& e);

/// Named residual magnitudes of every design identity; all entries are
/// maxima over the applicable index range.  verify() reports and never
/// throws.
struct ResidualReport {
  double unitarity = 0.0;          ///< ||U_j U_j* - I|| on the base grid
  double unitarity_shifted = 0.0;  ///< same on the half-shifted grid
  double normalization = 0.0;      ///< |sum_k h_k - 1|
  double regularity = 0.0;         ///< |L_l(E)|, moment functionals
  double realness = 0.0;           ///< ||U_j - conj(U_{M-j})||
  double shape_excess = 0.0;       ///< max(0, shape defect - gamma)
  double orthonormality = 0.0;     ///< |sum_k h_k conj(h_{k-2n}) - d_{n0}/2|

  /// Largest of the residuals that a feasible ensemble drives to zero
  /// (everything except shape_excess, which is zero once inside the ball).
  double max_hard() const;
};

ResidualReport verify(const Ensemble& e, const ProblemSpec& spec);

/// Scaling-function and wavelet samples on the dyadic grid of spacing
/// 2^-levels over [0, taps-1].
struct CascadeTable {
  std::vector<double> x;
  std::vector<double> phi;
  std::vector<double> psi;

  std::size_t size() const { return x.size(); }
};

/// Fixed-point iteration of the refinement operator
///   phi_{n+1}(x) = 2 sum_k h_k phi_n(2x - k)
/// from the indicator of [0,1), `levels` times on the dyadic grid of spacing
/// 2^-levels; the wavelet samples come from one application of the g-filter
/// to the final iterate.  Uses the real parts of the taps (imaginary parts
/// of feasible filters sit at residual level).  Throws Divergence when the
/// iterate exceeds 1e6 in magnitude.
CascadeTable cascade(const FilterPair& filters, int levels);

}  // namespace wavefeas
