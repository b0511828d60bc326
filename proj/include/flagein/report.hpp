#pragma once

#include "flagein/einstein.hpp"
#include "flagein/spaces.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace flagein {

using Json = nlohmann::ordered_json;

// Always "num/den", also for integers.
Json rational_json(const Rational& q);
Json rationals_json(const RationalVector& v);
Json triples_json(const TripleTable& t);

Json classification_report(int max_rank);

Json solutions_json(const SpaceModel& m, const std::vector<EinsteinSolution>& sols);

// Everything known about one space.
Json analyze_report(const SpaceSpec& spec, const SolverOptions& opt);

struct ReproductionFile {
    std::string name;  // file stem
    Json document;
    bool pass = false;
};

std::vector<ReproductionFile> reproduce_all(const SolverOptions& opt);

std::string render_text(const Json& doc);
// Rows of an array of flat objects; nested values are written as compact JSON.
std::string render_csv(const Json& rows);

}  // namespace flagein
