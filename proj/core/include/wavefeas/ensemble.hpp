#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wavefeas/algebra.hpp"

namespace wavefeas {

/// Thrown by idft() when the coefficients do not come from a sequence
/// satisfying the half-shift row-swap relation between the two sample halves.
struct InconsistentCoefficients : std::runtime_error {
  explicit InconsistentCoefficients(const std::string& what)
      : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Ensemble: M uniform samples of the 2x2 filter matrix on [0,1).
//
// Only the first M/2 samples are stored; sample j + M/2 is the row swap of
// sample j by construction, so that relation is never a numerical residual.
// Norms and inner products always refer to the full M-sample view.
// ---------------------------------------------------------------------------

class Ensemble {
 public:
  Ensemble() = default;

  /// free_half must contain exactly M/2 matrices; M even, >= 4.
  Ensemble(int samples, std::vector<Mat2> free_half)
      : M_(samples), free_(std::move(free_half)) {
    if (M_ < 4 || M_ % 2 != 0)
      throw std::invalid_argument("ensemble: sample count must be even and >= 4");
    if (static_cast<int>(free_.size()) != M_ / 2)
      throw std::invalid_argument("ensemble: expected M/2 stored samples");
  }

  static Ensemble zero(int samples) {
    return Ensemble(samples, std::vector<Mat2>(samples / 2));
  }

  int samples() const { return M_; }       // M
  int half() const { return M_ / 2; }

  const Mat2& free(int j) const { return free_[static_cast<std::size_t>(j)]; }
  Mat2& free(int j) { return free_[static_cast<std::size_t>(j)]; }

  /// Sample j of the full view; the index is reduced mod M (negatives too).
  Mat2 full(int j) const {
    const int m = ((j % M_) + M_) % M_;
    return m < half() ? free_[static_cast<std::size_t>(m)]
                      : row_swapped(free_[static_cast<std::size_t>(m - half())]);
  }

  double norm_sq() const {
    double s = 0.0;
    for (const Mat2& u : free_) s += u.norm_sq();
    return 2.0 * s;  // each stored sample appears twice in the full view
  }
  double norm() const { return std::sqrt(norm_sq()); }

  /// Full M-sample view flattened to 4M complex coordinates (row-major
  /// entries per sample), so the HPoint norm equals the ensemble norm.
  HPoint flatten() const;

  /// Rebuilds an ensemble from the leading M/2 samples of a flattened full
  /// view.  The caller guarantees the vector lies in the consistency
  /// subspace; the trailing half is ignored.
  static Ensemble from_flat(const HPoint& x, int samples);

  Ensemble& operator+=(const Ensemble& o) {
    require_same(o);
    for (std::size_t i = 0; i < free_.size(); ++i) free_[i] += o.free_[i];
    return *this;
  }
  Ensemble& operator-=(const Ensemble& o) {
    require_same(o);
    for (std::size_t i = 0; i < free_.size(); ++i) free_[i] -= o.free_[i];
    return *this;
  }
  Ensemble& operator*=(double s) {
    for (auto& u : free_) u *= s;
    return *this;
  }

 private:
  void require_same(const Ensemble& o) const {
    if (M_ != o.M_)
      throw std::invalid_argument("ensemble: sample count mismatch");
  }

  int M_ = 0;
  std::vector<Mat2> free_;
};

inline Ensemble operator+(Ensemble a, const Ensemble& b) { return a += b; }
inline Ensemble operator-(Ensemble a, const Ensemble& b) { return a -= b; }
inline Ensemble operator*(double s, Ensemble a) { return a *= s; }

/// Real inner product over the full M-sample view.
inline double dot(const Ensemble& a, const Ensemble& b) {
  if (a.samples() != b.samples())
    throw std::invalid_argument("ensemble: sample count mismatch");
  double s = 0.0;
  for (int j = 0; j < a.half(); ++j) s += dot(a.free(j), b.free(j));
  return 2.0 * s;
}

// ---------------------------------------------------------------------------
// CoeffSeq: the M trigonometric-polynomial coefficient matrices of an
// ensemble (filter taps sit in the first row of each coefficient).
// ---------------------------------------------------------------------------

class CoeffSeq {
 public:
  CoeffSeq() = default;
  explicit CoeffSeq(std::vector<Mat2> coeffs) : coeffs_(std::move(coeffs)) {}

  int size() const { return static_cast<int>(coeffs_.size()); }  // M
  const Mat2& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Mat2& coeff(int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<Mat2>& coeffs() const { return coeffs_; }

  double norm_sq() const {
    double s = 0.0;
    for (const Mat2& a : coeffs_) s += a.norm_sq();
    return s;
  }
  double norm() const { return std::sqrt(norm_sq()); }

 private:
  std::vector<Mat2> coeffs_;
};

/// Analysis transform: A_k = (1/M) sum_j U_j e^{-2 pi i j k / M}.
CoeffSeq dft(const Ensemble& e);

/// Synthesis transform: U_j = sum_k A_k e^{+2 pi i j k / M}.  Throws
/// InconsistentCoefficients when the reconstructed second half deviates from
/// the row swap of the first by more than 1e-10 relative.
Ensemble idft(const CoeffSeq& c);

/// Resamples the trigonometric polynomial through the ensemble at the nodes
/// (j + 1/2)/M: coefficients modulated by e^{+i pi k / M} then resynthesized.
/// A linear isometry of the consistency subspace onto itself.
Ensemble half_shift(const Ensemble& e);

/// Inverse of half_shift (modulation by e^{-i pi k / M}).
Ensemble half_shift_inverse(const Ensemble& e);

/// Seeded ensemble with i.i.d. standard-normal real and imaginary parts in
/// the stored samples.  Deterministic: equal (samples, seed) give bitwise
/// equal ensembles.
Ensemble random_ensemble(int samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// ProductPoint: 4-tuple of ensembles, the product-space iterate.
// ---------------------------------------------------------------------------

struct ProductPoint {
  std::array<Ensemble, 4> parts;

  int samples() const { return parts[0].samples(); }

  double norm_sq() const {
    double s = 0.0;
    for (const Ensemble& e : parts) s += e.norm_sq();
    return s;
  }
  double norm() const { return std::sqrt(norm_sq()); }

  HPoint flatten() const;

  ProductPoint& operator+=(const ProductPoint& o) {
    for (std::size_t i = 0; i < 4; ++i) parts[i] += o.parts[i];
    return *this;
  }
  ProductPoint& operator-=(const ProductPoint& o) {
    for (std::size_t i = 0; i < 4; ++i) parts[i] -= o.parts[i];
    return *this;
  }
  ProductPoint& operator*=(double s) {
    for (auto& e : parts) e *= s;
    return *this;
  }
};

inline ProductPoint operator+(ProductPoint a, const ProductPoint& b) {
  return a += b;
}
inline ProductPoint operator-(ProductPoint a, const ProductPoint& b) {
  return a -= b;
}
inline ProductPoint operator*(double s, ProductPoint a) { return a *= s; }

inline double dot(const ProductPoint& a, const ProductPoint& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += dot(a.parts[i], b.parts[i]);
  return s;
}

/// All four parts equal to e.
inline ProductPoint diagonal_point(const Ensemble& e) {
  return ProductPoint{{e, e, e, e}};
}

}  // namespace wavefeas
