#include "wavefeas/ensemble.hpp"

#include <numbers>

#include "wavefeas/rng.hpp"

namespace wavefeas {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

HPoint Ensemble::flatten() const {
  std::vector<Complex> coords;
  coords.reserve(static_cast<std::size_t>(4 * M_));
  for (int j = 0; j < M_; ++j) {
    const Mat2 u = full(j);
    coords.push_back(u.a11);
    coords.push_back(u.a12);
    coords.push_back(u.a21);
    coords.push_back(u.a22);
  }
  return HPoint(std::move(coords));
}

Ensemble Ensemble::from_flat(const HPoint& x, int samples) {
  if (static_cast<int>(x.size()) != 4 * samples)
    throw std::invalid_argument("from_flat: dimension does not match sample count");
  std::vector<Mat2> free_half(static_cast<std::size_t>(samples / 2));
  for (int j = 0; j < samples / 2; ++j) {
    const std::size_t b = static_cast<std::size_t>(4 * j);
    free_half[static_cast<std::size_t>(j)] = {x[b], x[b + 1], x[b + 2], x[b + 3]};
  }
  return Ensemble(samples, std::move(free_half));
}

HPoint ProductPoint::flatten() const {
  std::vector<Complex> coords;
  coords.reserve(static_cast<std::size_t>(16 * samples()));
  for (const Ensemble& e : parts) {
    const HPoint h = e.flatten();
    coords.insert(coords.end(), h.coords().begin(), h.coords().end());
  }
  return HPoint(std::move(coords));
}

CoeffSeq dft(const Ensemble& e) {
  const int m = e.samples();
  std::vector<Mat2> coeffs(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    Mat2 acc;
    for (int j = 0; j < m; ++j) {
      acc += std::polar(1.0, -kTwoPi * j * k / m) * e.full(j);
    }
    coeffs[static_cast<std::size_t>(k)] = (1.0 / m) * acc;
  }
  return CoeffSeq(std::move(coeffs));
}

Ensemble idft(const CoeffSeq& c) {
  const int m = c.size();
  if (m < 4 || m % 2 != 0)
    throw std::invalid_argument("idft: coefficient count must be even and >= 4");

  std::vector<Mat2> samples(static_cast<std::size_t>(m));
  double max_norm = 0.0;
  for (int j = 0; j < m; ++j) {
    Mat2 acc;
    for (int k = 0; k < m; ++k) {
      acc += std::polar(1.0, kTwoPi * j * k / m) * c.coeff(k);
    }
    samples[static_cast<std::size_t>(j)] = acc;
    max_norm = std::max(max_norm, acc.norm());
  }

  const double tol = 1e-10 * std::max(1.0, max_norm);
  for (int j = 0; j < m / 2; ++j) {
    const Mat2 dev = samples[static_cast<std::size_t>(j + m / 2)] -
                     row_swapped(samples[static_cast<std::size_t>(j)]);
    if (dev.norm() > tol)
      throw InconsistentCoefficients(
          "idft: second sample half is not the row swap of the first");
  }

  samples.resize(static_cast<std::size_t>(m / 2));
  return Ensemble(m, std::move(samples));
}

namespace {

// Common body of the half-shift pair: modulate the coefficients by
// e^{sign * i pi k / M} and resynthesize the stored samples.
Ensemble modulated_resample(const Ensemble& e, double sign) {
  const int m = e.samples();
  const CoeffSeq c = dft(e);
  std::vector<Mat2> out(static_cast<std::size_t>(m / 2));
  for (int j = 0; j < m / 2; ++j) {
    Mat2 acc;
    for (int k = 0; k < m; ++k) {
      const double angle = kTwoPi * j * k / m + sign * std::numbers::pi * k / m;
      acc += std::polar(1.0, angle) * c.coeff(k);
    }
    out[static_cast<std::size_t>(j)] = acc;
  }
  return Ensemble(m, std::move(out));
}

}  // namespace

Ensemble half_shift(const Ensemble& e) { return modulated_resample(e, 1.0); }

Ensemble half_shift_inverse(const Ensemble& e) {
  return modulated_resample(e, -1.0);
}

Ensemble random_ensemble(int samples, std::uint64_t seed) {
  if (samples < 4 || samples % 2 != 0)
    throw std::invalid_argument("random_ensemble: sample count must be even and >= 4");
  Rng rng(seed);
  std::vector<Mat2> free_half(static_cast<std::size_t>(samples / 2));
  for (Mat2& u : free_half) {
    u.a11 = {rng.normal(), rng.normal()};
    u.a12 = {rng.normal(), rng.normal()};
    u.a21 = {rng.normal(), rng.normal()};
    u.a22 = {rng.normal(), rng.normal()};
  }
  return Ensemble(samples, std::move(free_half));
}

}  // namespace wavefeas
