#include "doctest.h"

#include "support.hpp"
#include "wavefeas/io.hpp"

using namespace wavefeas;
using namespace wavefeas::test;

TEST_CASE("ensemble wire format round trips exactly") {
  const Ensemble e = random_ensemble(6, 91);
  const Json j = to_json(e);
  CHECK(j["M"] == 6);
  CHECK(j["free"].size() == 3);
  CHECK(j["free"][0][0].size() == 2);

  const Ensemble back = ensemble_from_json(j);
  CHECK((back - e).norm() == 0.0);
}

TEST_CASE("ensemble parsing validates the document shape") {
  CHECK_THROWS_AS(ensemble_from_json(Json{{"M", 6}}), std::invalid_argument);
  Json j = to_json(random_ensemble(6, 92));
  j["free"].erase(2);
  CHECK_THROWS_AS(ensemble_from_json(j), std::invalid_argument);
}

TEST_CASE("filter documents accept real taps, pairs, and solver output") {
  const Json plain{{"h", {0.5, 0.5}}, {"g", {0.5, -0.5}}};
  const FilterPair f = filters_from_json(plain);
  CHECK(f.taps() == 2);
  CHECK(f.h[0] == Complex(0.5, 0.0));
  CHECK(f.g[1] == Complex(-0.5, 0.0));

  const Json pairs{{"h", {{0.5, 0.0}, {0.0, -0.25}}}};
  const FilterPair g = filters_from_json(pairs);
  CHECK(g.h[1] == Complex(0.0, -0.25));
  CHECK(g.g.size() == 2);  // padded with zeros
  CHECK(g.g[0] == Complex(0.0, 0.0));

  const Json nested{{"filters", plain}};
  CHECK(filters_from_json(nested).taps() == 2);

  CHECK_THROWS_AS(filters_from_json(Json{{"g", {1.0}}}), std::invalid_argument);
}

TEST_CASE("filter pair serialization round trips") {
  const FilterPair f = extract_filters(haar_ensemble());
  const FilterPair back = filters_from_json(to_json(f));
  REQUIRE(back.taps() == f.taps());
  for (int k = 0; k < f.taps(); ++k) {
    CHECK(back.h[static_cast<std::size_t>(k)] == f.h[static_cast<std::size_t>(k)]);
    CHECK(back.g[static_cast<std::size_t>(k)] == f.g[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("run record serialization carries the schema fields") {
  RunRecord r;
  r.solved = true;
  r.stage1_iters = 12;
  r.stage2_iters = 34;
  r.final_gap = 5.5e-10;
  r.projection_evals = 123;
  r.seed = 9;
  r.algorithm = Algorithm::kGCRM;
  const Json j = to_json(r);
  CHECK(j["solved"] == true);
  CHECK(j["stage1_iters"] == 12);
  CHECK(j["stage2_iters"] == 34);
  CHECK(j["final_gap"] == 5.5e-10);
  CHECK(j["projection_evals"] == 123);
  CHECK(j["seed"] == 9);
  CHECK(j["algorithm"] == "gcrm");
  CHECK_FALSE(j.contains("trace"));
  CHECK_FALSE(j.contains("solution"));

  r.trace = {1.0, 0.5};
  r.solution = haar_ensemble();
  const Json full = to_json(r);
  CHECK(full["trace"].size() == 2);
  CHECK(full["solution"]["M"] == 6);
}

TEST_CASE("residual report serialization") {
  const Json j = to_json(verify(haar_ensemble(), ProblemSpec{}));
  for (const char* key : {"unitarity", "unitarity_shifted", "normalization",
                          "regularity", "realness", "shape_excess",
                          "orthonormality"})
    CHECK(j.contains(key));
}

TEST_CASE("cascade tables print 17 significant digits") {
  CascadeTable t;
  t.x = {0.0, 1.0 / 3.0};
  t.phi = {1.0, 0.125};
  t.psi = {0.0, -2.0};
  const std::string csv = to_csv(t);
  CHECK(csv.substr(0, 10) == "x,phi,psi\n");
  CHECK(csv.find("0.33333333333333331") != std::string::npos);
  CHECK(csv.find("0.125,") != std::string::npos);

  // Round trip: parsed values match to the bit.
  double x = 0, phi = 0, psi = 0;
  const std::size_t line = csv.find('\n', 10);
  std::sscanf(csv.c_str() + line + 1, "%lf,%lf,%lf", &x, &phi, &psi);
  CHECK(x == 1.0 / 3.0);
  CHECK(psi == -2.0);
}
