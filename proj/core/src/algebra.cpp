#include "wavefeas/algebra.hpp"

namespace wavefeas {

namespace {

Mat2 inverse(const Mat2& a) {
  const Complex inv = 1.0 / a.det();
  return {inv * a.a22, -inv * a.a12, -inv * a.a21, inv * a.a11};
}

}  // namespace

Mat2 polar_unitary(const Mat2& a) {
  const double scale = a.norm();
  if (scale < 1e-150) return Mat2::identity();

  // Gram matrix H = a* a = [p q; conj(q) r], Hermitian PSD.
  const double p = std::norm(a.a11) + std::norm(a.a21);
  const double r = std::norm(a.a12) + std::norm(a.a22);
  const Complex q = std::conj(a.a11) * a.a12 + std::conj(a.a21) * a.a22;

  const double tau = p + r;               // tr H = |a|^2
  const double s1s2 = std::abs(a.det());  // product of the singular values
  double disc = tau * tau - 4.0 * s1s2 * s1s2;
  if (disc < 0.0) disc = 0.0;
  const double lam1 = 0.5 * (tau + std::sqrt(disc));
  const double s1 = std::sqrt(lam1);
  const double s2 = s1 > 0.0 ? s1s2 / s1 : 0.0;

  if (s2 > 1e-14 * scale) {
    // Q = a H^{-1/2}, with H^{1/2} = (H + s1 s2 I) / sqrt(tau + 2 s1 s2) by
    // Cayley-Hamilton.  The polish step restores unitarity lost to
    // conditioning when the singular values are far apart.
    const double mu = std::sqrt(tau + 2.0 * s1s2);
    const double det_b = 2.0 * s1s2 * s1s2 + s1s2 * tau;  // det(H + s1 s2 I)
    const double f = mu / det_b;
    const Mat2 inv_sqrt{Complex(f * (r + s1s2), 0.0), -f * q,
                        -f * std::conj(q), Complex(f * (p + s1s2), 0.0)};
    Mat2 u = a * inv_sqrt;
    u = 0.5 * (u + inverse(u.adjoint()));
    return u;
  }

  // Rank <= 1.  Dominant right singular vector from H, the left one from a,
  // both completed by the fixed quarter-turn so the null directions map to
  // an identity block in the singular bases.
  Complex v1a, v1b;
  const double pick1 = std::norm(q) + (lam1 - p) * (lam1 - p);
  const double pick2 = (lam1 - r) * (lam1 - r) + std::norm(q);
  if (pick1 >= pick2) {
    v1a = q;
    v1b = Complex(lam1 - p, 0.0);
  } else {
    v1a = Complex(lam1 - r, 0.0);
    v1b = std::conj(q);
  }
  double vn = std::sqrt(std::norm(v1a) + std::norm(v1b));
  if (vn < 1e-150) {
    v1a = 1.0;
    v1b = 0.0;
    vn = 1.0;
  }
  v1a /= vn;
  v1b /= vn;

  Complex u1a = a.a11 * v1a + a.a12 * v1b;
  Complex u1b = a.a21 * v1a + a.a22 * v1b;
  const double un = std::sqrt(std::norm(u1a) + std::norm(u1b));
  u1a /= un;
  u1b /= un;

  const Complex u2a = -std::conj(u1b), u2b = std::conj(u1a);
  const Complex v2a = -std::conj(v1b), v2b = std::conj(v1a);

  // Q = u1 v1* + u2 v2*.
  return {u1a * std::conj(v1a) + u2a * std::conj(v2a),
          u1a * std::conj(v1b) + u2a * std::conj(v2b),
          u1b * std::conj(v1a) + u2b * std::conj(v2a),
          u1b * std::conj(v1b) + u2b * std::conj(v2b)};
}

}  // namespace wavefeas
