#include "wavefeas/wavelet.hpp"

#include <algorithm>
#include <cmath>

namespace wavefeas {

FilterPair extract_filters(const Ensemble& e) {
  const CoeffSeq c = dft(e);
  const int m = c.size();

  double scale = 1.0;
  for (int k = 0; k < m; ++k) scale = std::max(scale, c.coeff(k).norm());
  const double tol = 1e-10 * scale;

  FilterPair f;
  f.h.resize(static_cast<std::size_t>(m));
  f.g.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const Mat2& a = c.coeff(k);
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    if (std::abs(a.a21 - sign * a.a11) > tol ||
        std::abs(a.a22 - sign * a.a12) > tol) {
      throw StructureViolation(
          "coefficient rows lack the alternating-sign structure");
    }
    f.h[static_cast<std::size_t>(k)] = a.a11;
    f.g[static_cast<std::size_t>(k)] = a.a12;
  }
  return f;
}

double ResidualReport::max_hard() const {
  double worst = unitarity;
  worst = std::max(worst, unitarity_shifted);
  worst = std::max(worst, normalization);
  worst = std::max(worst, regularity);
  worst = std::max(worst, realness);
  return worst;
}

ResidualReport verify(const Ensemble& e, const ProblemSpec& spec) {
  const ProblemProjections ops(spec);
  const int m = e.samples();
  ResidualReport r;

  auto unitary_residual = [](const Mat2& u) {
    return (u * u.adjoint() - Mat2::identity()).norm();
  };

  for (int j = 0; j < m; ++j)
    r.unitarity = std::max(r.unitarity, unitary_residual(e.full(j)));

  const Ensemble shifted = half_shift(e);
  for (int j = 0; j < m; ++j)
    r.unitarity_shifted =
        std::max(r.unitarity_shifted, unitary_residual(shifted.full(j)));

  for (int j = 0; j < m; ++j) {
    const Mat2 dev = e.full(j) - e.full((m - j) % m).conjugate();
    r.realness = std::max(r.realness, dev.norm());
  }

  for (const Complex& v : ops.regularity().values(e))
    r.regularity = std::max(r.regularity, std::abs(v));

  r.shape_excess = std::max(0.0, ops.max_shape_defect(e) - spec.gamma);

  const FilterPair f = extract_filters(e);
  Complex mass;
  for (const Complex& h : f.h) mass += h;
  r.normalization = std::abs(mass - 1.0);

  for (int n = 0; n < m / 2; ++n) {
    Complex acc;
    for (int k = 2 * n; k < m; ++k) {
      acc += f.h[static_cast<std::size_t>(k)] *
             std::conj(f.h[static_cast<std::size_t>(k - 2 * n)]);
    }
    const double target = n == 0 ? 0.5 : 0.0;
    r.orthonormality = std::max(r.orthonormality, std::abs(acc - target));
  }

  return r;
}

CascadeTable cascade(const FilterPair& filters, int levels) {
  const int taps = filters.taps();
  if (levels < 1) throw std::invalid_argument("cascade: levels must be >= 1");
  if (taps < 2) throw std::invalid_argument("cascade: need at least two taps");

  std::vector<double> h(static_cast<std::size_t>(taps));
  std::vector<double> g(static_cast<std::size_t>(taps), 0.0);
  for (int k = 0; k < taps; ++k) {
    h[static_cast<std::size_t>(k)] = filters.h[static_cast<std::size_t>(k)].real();
    if (k < static_cast<int>(filters.g.size()))
      g[static_cast<std::size_t>(k)] = filters.g[static_cast<std::size_t>(k)].real();
  }

  const long step = 1L << levels;  // grid points per unit length
  const long count = static_cast<long>(taps - 1) * step + 1;

  // Indicator of [0, 1) sampled on the grid.
  std::vector<double> phi(static_cast<std::size_t>(count), 0.0);
  for (long i = 0; i < std::min(step, count); ++i)
    phi[static_cast<std::size_t>(i)] = 1.0;

  auto refine = [&](const std::vector<double>& mask,
                    const std::vector<double>& prev) {
    std::vector<double> next(static_cast<std::size_t>(count), 0.0);
    for (long i = 0; i < count; ++i) {
      double acc = 0.0;
      for (int k = 0; k < taps; ++k) {
        const long idx = 2 * i - k * step;
        if (idx >= 0 && idx < count)
          acc += mask[static_cast<std::size_t>(k)] *
                 prev[static_cast<std::size_t>(idx)];
      }
      next[static_cast<std::size_t>(i)] = 2.0 * acc;
    }
    return next;
  };

  for (int it = 0; it < levels; ++it) {
    phi = refine(h, phi);
    double peak = 0.0;
    for (double v : phi) peak = std::max(peak, std::abs(v));
    if (peak > 1e6)
      throw Divergence("cascade: iterate magnitude exceeded 1e6");
  }

  CascadeTable out;
  out.x.resize(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i)
    out.x[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(step);
  out.psi = refine(g, phi);
  out.phi = std::move(phi);
  return out;
}

}  // namespace wavefeas
