#pragma once

#include <string>

#include "json.hpp"
#include "wavefeas/harness.hpp"
#include "wavefeas/wavelet.hpp"

namespace wavefeas {

using Json = nlohmann::json;

// Ensemble wire format:
//   {"M": int, "free": [[[re,im] x4] x M/2]}
// with row-major matrix entry order (a11, a12, a21, a22).
Json to_json(const Ensemble& e);
Ensemble ensemble_from_json(const Json& j);

// Filter files accept {"h": [...], "g": [...]} where taps are numbers or
// [re, im] pairs; "g" defaults to zeros.  A solver output document (with a
// top-level "filters" object) is accepted as well.
Json to_json(const FilterPair& f);
FilterPair filters_from_json(const Json& j);

// RunRecord: solved, stage1_iters, stage2_iters, final_gap, projection_evals,
// seed, algorithm, plus trace when recorded and solution when present.
Json to_json(const RunRecord& r);

Json to_json(const ResidualReport& r);

// BenchStats: one object per algorithm with cases_solved, solved_by_all,
// wins, Q1, mean, Q3, median (quartile keys omitted when nothing was solved
// by all), plus the tie count.
Json to_json(const BenchStats& s);

// CSV with header x,phi,psi and 17 significant digits per value.
std::string to_csv(const CascadeTable& t);

}  // namespace wavefeas
