#include "doctest.h"

#include <cmath>

#include "support.hpp"
#include "wavefeas/wavelet.hpp"

using namespace wavefeas;
using namespace wavefeas::test;

TEST_CASE("filter extraction: constant and Haar-type ensembles") {
  const Mat2 x{1.0, 0.0, 1.0, 0.0};
  const Ensemble constant(6, std::vector<Mat2>(3, x));
  const FilterPair fc = extract_filters(constant);
  CHECK(std::abs(fc.h[0] - 1.0) < 1e-13);
  for (int k = 1; k < 6; ++k) CHECK(std::abs(fc.h[static_cast<std::size_t>(k)]) < 1e-13);
  for (const Complex& g : fc.g) CHECK(std::abs(g) < 1e-13);

  const FilterPair fh = extract_filters(haar_ensemble());
  CHECK(std::abs(fh.h[0] - 0.5) < 1e-13);
  CHECK(std::abs(fh.h[1] - 0.5) < 1e-13);
  CHECK(std::abs(fh.g[0] - 0.5) < 1e-13);
  CHECK(std::abs(fh.g[1] + 0.5) < 1e-13);
  for (int k = 2; k < 6; ++k) {
    CHECK(std::abs(fh.h[static_cast<std::size_t>(k)]) < 1e-13);
    CHECK(std::abs(fh.g[static_cast<std::size_t>(k)]) < 1e-13);
  }
}

TEST_CASE("filter extraction inverts sampling of degree-bounded filters") {
  // Build an ensemble from arbitrary real filters and read the taps back.
  Rng rng(81);
  std::vector<double> h(6), g(6);
  for (auto& v : h) v = rng.normal();
  for (auto& v : g) v = rng.normal();
  auto eval = [](const std::vector<double>& taps, double xi) {
    Complex acc;
    for (std::size_t k = 0; k < taps.size(); ++k)
      acc += taps[k] * std::polar(1.0, 2.0 * kPi * static_cast<double>(k) * xi);
    return acc;
  };
  std::vector<Mat2> stored(3);
  for (int j = 0; j < 3; ++j) {
    const double xi = j / 6.0;
    stored[static_cast<std::size_t>(j)] =
        Mat2{eval(h, xi), eval(g, xi), eval(h, xi + 0.5), eval(g, xi + 0.5)};
  }
  const FilterPair f = extract_filters(Ensemble(6, std::move(stored)));
  for (int k = 0; k < 6; ++k) {
    CHECK(std::abs(f.h[static_cast<std::size_t>(k)] - h[static_cast<std::size_t>(k)]) < 1e-12);
    CHECK(std::abs(f.g[static_cast<std::size_t>(k)] - g[static_cast<std::size_t>(k)]) < 1e-12);
  }
}

TEST_CASE("residual report: Haar-type ensemble") {
  const ResidualReport r = verify(haar_ensemble(), ProblemSpec{});
  CHECK(r.unitarity < 1e-12);
  CHECK(r.unitarity_shifted < 1e-12);
  CHECK(r.normalization < 1e-12);
  CHECK(r.realness < 1e-12);
  CHECK(r.orthonormality < 1e-12);
  // Haar has no first-derivative regularity; the report must say so.
  CHECK(r.regularity > 0.1);
}

TEST_CASE("residual report: random ensembles have positive residuals") {
  const ResidualReport r = verify(random_ensemble(6, 82), ProblemSpec{});
  CHECK(r.unitarity > 0.1);
  CHECK(r.unitarity_shifted > 0.1);
  CHECK(r.realness > 0.1);
  CHECK(r.max_hard() >= r.unitarity);
}

TEST_CASE("column orthonormality of feasible-style filters") {
  // The Haar-type ensemble satisfies the shifted-tap identity exactly.
  const FilterPair f = extract_filters(haar_ensemble());
  for (int n = 0; n < 3; ++n) {
    Complex acc;
    for (int k = 2 * n; k < 6; ++k)
      acc += f.h[static_cast<std::size_t>(k)] *
             std::conj(f.h[static_cast<std::size_t>(k - 2 * n)]);
    CHECK(std::abs(acc - (n == 0 ? 0.5 : 0.0)) < 1e-13);
  }
}

TEST_CASE("cascade: Haar reproduces the box at every level") {
  FilterPair haar;
  haar.h = {0.5, 0.5};
  haar.g = {0.5, -0.5};
  for (int levels = 1; levels <= 8; ++levels) {
    const CascadeTable t = cascade(haar, levels);
    CHECK(t.size() == static_cast<std::size_t>((1 << levels) + 1));
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double expected = t.x[i] < 1.0 ? 1.0 : 0.0;
      CHECK(t.phi[i] == expected);
    }
  }
}

TEST_CASE("cascade: hat-function filter converges at the stated rate") {
  FilterPair hat;
  hat.h = {0.25, 0.5, 0.25};
  hat.g = {0.0, 0.0, 0.0};
  const int levels = 10;
  const CascadeTable t = cascade(hat, levels);
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double x = t.x[i];
    const double expected = x <= 1.0 ? x : (x <= 2.0 ? 2.0 - x : 0.0);
    worst = std::max(worst, std::abs(t.phi[i] - expected));
  }
  CHECK(worst < std::ldexp(1.0, -levels + 2));
}

TEST_CASE("cascade preserves unit mass at every level") {
  FilterPair f;
  f.h = {0.25, 0.5, 0.25};
  f.g = {0.5, -0.5, 0.0};
  for (int levels = 1; levels <= 10; ++levels) {
    const CascadeTable t = cascade(f, levels);
    double mass = 0.0;
    for (double v : t.phi) mass += v;
    mass = std::ldexp(mass, -levels);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("cascade emits wavelet samples from one detail application") {
  FilterPair haar;
  haar.h = {0.5, 0.5};
  haar.g = {0.5, -0.5};
  const CascadeTable t = cascade(haar, 4);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double x = t.x[i];
    const double expected = x < 0.5 ? 1.0 : (x < 1.0 ? -1.0 : 0.0);
    CHECK(t.psi[i] == doctest::Approx(expected));
  }
}

TEST_CASE("cascade rejects diverging filters and bad arguments") {
  FilterPair bad;
  bad.h = {3.0, 3.0};
  bad.g = {0.0, 0.0};
  CHECK_THROWS_AS(cascade(bad, 10), Divergence);

  FilterPair haar;
  haar.h = {0.5, 0.5};
  haar.g = {0.5, -0.5};
  CHECK_THROWS_AS(cascade(haar, 0), std::invalid_argument);
}
