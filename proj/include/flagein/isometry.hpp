#pragma once

#include "flagein/einstein.hpp"

#include <string>
#include <vector>

namespace flagein {

// S_g = sum d_i r_i
double scalar_curvature(const SpaceModel& m, const MetricParams& x);
// Same quantity from the double sum  1/2 sum d_i/x_i - 1/4 sum_{ijk} [ijk] x_k/(x_i x_j).
double scalar_curvature_explicit(const SpaceModel& m, const MetricParams& x);

// Volume relative to -B, i.e. prod x_i^{d_i}.  Returned as its logarithm; the plain
// value overflows for the larger spaces.
double log_volume(const SpaceModel& m, const MetricParams& x);

// H_g = V_g^{1/d} S_g, invariant under rescaling.
double scale_invariant(const SpaceModel& m, const MetricParams& x);

struct ScaleRecord {
    MetricParams metric;
    SolutionKind kind = SolutionKind::NonKaehler;
    int ordering = -1;
    double S = 0;
    double log_V = 0;
    double H = 0;
};

struct PairVerdict {
    int a = 0, b = 0;
    std::string label;  // "non-isometric" or "indistinguishable by H"
};

struct ScaleReport {
    std::vector<ScaleRecord> records;
    std::vector<std::vector<int>> groups;  // indices into records, equal H
    std::vector<PairVerdict> pairs;        // every unordered pair
};

// Groups with |H_i - H_j| <= rel_tol * max(|H_i|, 1), closed transitively.
ScaleReport isometry_report(const SpaceModel& m, const std::vector<EinsteinSolution>& sols, double rel_tol = 1e-6);

}  // namespace flagein
