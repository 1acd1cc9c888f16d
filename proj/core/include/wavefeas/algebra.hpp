#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace wavefeas {

using Complex = std::complex<double>;

/// Thrown by circumcenter() when the three points are (numerically) colinear.
/// Callers are expected to test colinear() first and take their fallback
/// branch instead of catching this.
struct DegenerateTriple : std::runtime_error {
  DegenerateTriple()
      : std::runtime_error("circumcenter: point triple is colinear") {}
};

// ---------------------------------------------------------------------------
// Mat2: 2x2 complex matrix with value semantics.
// ---------------------------------------------------------------------------

/// Entries are row-major: (a11 a12; a21 a22).
struct Mat2 {
  Complex a11{}, a12{}, a21{}, a22{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  /// The row-swap permutation.
  static Mat2 row_swap() { return {0.0, 1.0, 1.0, 0.0}; }
  /// diag(-1, 1).
  static Mat2 sign_flip() { return {-1.0, 0.0, 0.0, 1.0}; }

  Mat2 adjoint() const {
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
  }
  Mat2 conjugate() const {
    return {std::conj(a11), std::conj(a12), std::conj(a21), std::conj(a22)};
  }
  Complex det() const { return a11 * a22 - a12 * a21; }
  Complex trace() const { return a11 + a22; }

  double norm_sq() const {
    return std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22);
  }
  double norm() const { return std::sqrt(norm_sq()); }

  Mat2& operator+=(const Mat2& o) {
    a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22;
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    a11 -= o.a11; a12 -= o.a12; a21 -= o.a21; a22 -= o.a22;
    return *this;
  }
  Mat2& operator*=(Complex s) {
    a11 *= s; a12 *= s; a21 *= s; a22 *= s;
    return *this;
  }
  Mat2& operator*=(double s) { return *this *= Complex(s, 0.0); }
};

inline Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
inline Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
inline Mat2 operator*(Complex s, Mat2 a) { return a *= s; }
inline Mat2 operator*(double s, Mat2 a) { return a *= s; }
inline Mat2 operator-(const Mat2& a) { return -1.0 * a; }

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

/// Swaps the two rows (left-multiplication by the permutation).
inline Mat2 row_swapped(const Mat2& a) { return {a.a21, a.a22, a.a11, a.a12}; }

/// Conjugation by diag(-1,1): negates exactly the off-diagonal entries.
inline Mat2 sign_conjugated(const Mat2& a) {
  return {a.a11, -a.a12, -a.a21, a.a22};
}

/// Real (Frobenius) inner product Re tr(x y*).
inline double dot(const Mat2& x, const Mat2& y) {
  double s = 0.0;
  s += x.a11.real() * y.a11.real() + x.a11.imag() * y.a11.imag();
  s += x.a12.real() * y.a12.real() + x.a12.imag() * y.a12.imag();
  s += x.a21.real() * y.a21.real() + x.a21.imag() * y.a21.imag();
  s += x.a22.real() * y.a22.real() + x.a22.imag() * y.a22.imag();
  return s;
}

/// z/|z|, or 1 when z is (numerically) zero.
inline Complex phase_or_one(Complex z, double tiny = 1e-14) {
  const double a = std::abs(z);
  return a < tiny ? Complex(1.0, 0.0) : z / a;
}

/// Nearest unitary matrix in Frobenius norm (the polar factor).
///
/// Nonsingular inputs use the closed-form inverse square root of a*a.  When
/// the smaller singular value falls below 1e-14 * ||a||, the minimizer is not
/// unique; the singular vectors are completed deterministically (identity
/// block in the singular bases), so the function stays a pure, reproducible
/// selector.  The zero matrix maps to the identity.
Mat2 polar_unitary(const Mat2& a);

// ---------------------------------------------------------------------------
// HPoint: point of the ambient real Hilbert space, stored as complex coords.
// ---------------------------------------------------------------------------

class HPoint {
 public:
  HPoint() = default;
  explicit HPoint(std::vector<Complex> coords) : coords_(std::move(coords)) {}
  HPoint(std::initializer_list<Complex> coords) : coords_(coords) {}

  static HPoint zeros(std::size_t n) {
    return HPoint(std::vector<Complex>(n, Complex{}));
  }

  std::size_t size() const { return coords_.size(); }
  Complex& operator[](std::size_t i) { return coords_[i]; }
  const Complex& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Complex>& coords() const { return coords_; }

  HPoint& operator+=(const HPoint& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  HPoint& operator-=(const HPoint& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  HPoint& operator*=(double s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

 private:
  void require_same_size(const HPoint& o) const {
    if (coords_.size() != o.coords_.size())
      throw std::invalid_argument("HPoint dimension mismatch");
  }
  std::vector<Complex> coords_;
};

inline HPoint operator+(HPoint a, const HPoint& b) { return a += b; }
inline HPoint operator-(HPoint a, const HPoint& b) { return a -= b; }
inline HPoint operator*(double s, HPoint a) { return a *= s; }

/// Real inner product Re sum_i x_i conj(y_i).
inline double dot(const HPoint& x, const HPoint& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("HPoint dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Generic geometry on any type with +, -, double* and a real inner product.
// ---------------------------------------------------------------------------

template <class V>
concept VectorPoint = requires(const V& a, const V& b, double s) {
  { dot(a, b) } -> std::convertible_to<double>;
  { a + b } -> std::convertible_to<V>;
  { a - b } -> std::convertible_to<V>;
  { s * a } -> std::convertible_to<V>;
};

template <VectorPoint V>
double norm_sq(const V& v) { return dot(v, v); }

template <VectorPoint V>
double norm(const V& v) { return std::sqrt(dot(v, v)); }

template <VectorPoint V>
double dist(const V& a, const V& b) { return norm(a - b); }

inline constexpr double kColinearTol = 1e-12;

/// True when y-x and z-x span less than a tol-sized parallelogram relative
/// to their lengths (degenerate differences count as colinear).
template <VectorPoint V>
bool colinear(const V& x, const V& y, const V& z, double tol = kColinearTol) {
  const V u = y - x;
  const V v = z - x;
  const double uu = dot(u, u);
  const double vv = dot(v, v);
  if (uu == 0.0 || vv == 0.0) return true;
  const double uv = dot(u, v);
  return uv * uv >= (1.0 - tol) * uu * vv;
}

/// Circumcenter of three non-colinear points: the unique point of their
/// affine span equidistant from all three, via the 2x2 Gram system
///   <c-x, y-x> = |y-x|^2 / 2,   <c-x, z-x> = |z-x|^2 / 2.
template <VectorPoint V>
V circumcenter(const V& x, const V& y, const V& z) {
  if (colinear(x, y, z)) throw DegenerateTriple{};
  const V u = y - x;
  const V v = z - x;
  const double uu = dot(u, u);
  const double vv = dot(v, v);
  const double uv = dot(u, v);
  const double det = uu * vv - uv * uv;
  if (!(det > 0.0)) throw DegenerateTriple{};
  const double a = 0.5 * vv * (uu - uv) / det;
  const double b = 0.5 * uu * (vv - uv) / det;
  return x + a * u + b * v;
}

}  // namespace wavefeas
