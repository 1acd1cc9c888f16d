#include "wavefeas/io.hpp"

#include <cstdio>

namespace wavefeas {

namespace {

Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw std::invalid_argument("expected a number or an [re, im] pair");
}

std::vector<Complex> taps_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("filter taps must be an array");
  std::vector<Complex> taps;
  taps.reserve(j.size());
  for (const Json& t : j) taps.push_back(complex_from_json(t));
  return taps;
}

}  // namespace

Json to_json(const Ensemble& e) {
  Json stored = Json::array();
  for (int j = 0; j < e.half(); ++j) {
    const Mat2& u = e.free(j);
    stored.push_back(Json::array({complex_to_json(u.a11), complex_to_json(u.a12),
                                  complex_to_json(u.a21), complex_to_json(u.a22)}));
  }
  return Json{{"M", e.samples()}, {"free", stored}};
}

Ensemble ensemble_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("M") || !j.contains("free"))
    throw std::invalid_argument("ensemble document needs \"M\" and \"free\"");
  const int m = j.at("M").get<int>();
  const Json& stored = j.at("free");
  if (!stored.is_array() || static_cast<int>(stored.size()) != m / 2)
    throw std::invalid_argument("ensemble \"free\" must hold M/2 matrices");
  std::vector<Mat2> free_half;
  free_half.reserve(stored.size());
  for (const Json& mat : stored) {
    if (!mat.is_array() || mat.size() != 4)
      throw std::invalid_argument("each matrix must hold 4 entries");
    free_half.push_back(Mat2{complex_from_json(mat[0]), complex_from_json(mat[1]),
                             complex_from_json(mat[2]), complex_from_json(mat[3])});
  }
  return Ensemble(m, std::move(free_half));
}

Json to_json(const FilterPair& f) {
  Json h = Json::array();
  Json g = Json::array();
  for (const Complex& t : f.h) h.push_back(complex_to_json(t));
  for (const Complex& t : f.g) g.push_back(complex_to_json(t));
  return Json{{"h", h}, {"g", g}};
}

FilterPair filters_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("filter document must be an object");
  if (j.contains("filters")) return filters_from_json(j.at("filters"));
  if (!j.contains("h")) throw std::invalid_argument("filter document needs \"h\"");

  FilterPair f;
  f.h = taps_from_json(j.at("h"));
  if (f.h.size() < 2) throw std::invalid_argument("need at least two h taps");
  if (j.contains("g")) {
    f.g = taps_from_json(j.at("g"));
    if (f.g.size() > f.h.size())
      throw std::invalid_argument("g may not be longer than h");
  }
  f.g.resize(f.h.size(), Complex{});
  return f;
}

Json to_json(const RunRecord& r) {
  Json j{{"solved", r.solved},
         {"stage1_iters", r.stage1_iters},
         {"stage2_iters", r.stage2_iters},
         {"final_gap", r.final_gap},
         {"projection_evals", r.projection_evals},
         {"seed", r.seed},
         {"algorithm", algorithm_name(r.algorithm)}};
  if (!r.trace.empty()) j["trace"] = r.trace;
  if (r.solution) j["solution"] = to_json(*r.solution);
  return j;
}

Json to_json(const ResidualReport& r) {
  return Json{{"unitarity", r.unitarity},
              {"unitarity_shifted", r.unitarity_shifted},
              {"normalization", r.normalization},
              {"regularity", r.regularity},
              {"realness", r.realness},
              {"shape_excess", r.shape_excess},
              {"orthonormality", r.orthonormality}};
}

Json to_json(const BenchStats& s) {
  Json rows = Json::array();
  for (const AlgorithmStats& a : s.algorithms) {
    Json row{{"algorithm", algorithm_name(a.algorithm)},
             {"cases_solved", a.cases_solved},
             {"solved_by_all", a.solved_by_all},
             {"wins", a.wins}};
    if (a.Q1) row["Q1"] = *a.Q1;
    if (a.mean) row["mean"] = *a.mean;
    if (a.Q3) row["Q3"] = *a.Q3;
    if (a.median) row["median"] = *a.median;
    rows.push_back(std::move(row));
  }
  return Json{{"algorithms", rows}, {"ties", s.ties}, {"starts", s.starts}};
}

std::string to_csv(const CascadeTable& t) {
  std::string out = "x,phi,psi\n";
  char line[160];
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", t.x[i], t.phi[i],
                  t.psi[i]);
    out += line;
  }
  return out;
}

}  // namespace wavefeas
