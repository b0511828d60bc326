#pragma once

#include "flagein/flagdecomp.hpp"
#include "flagein/kahler.hpp"
#include "flagein/ricci.hpp"
#include "flagein/triples.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace flagein {

// Everything the Einstein equations need about a four-summand space.
struct SpaceModel {
    std::string name;
    SpaceType type = SpaceType::Other;
    std::vector<int> dims;
    TripleTable triples;
    std::vector<KEMetric> ke;  // one per ordering class
    std::optional<Decomposition> decomposition;
};

SpaceModel model_from_decomposition(const Decomposition& dec, std::string name = "");

using MetricParams = std::vector<double>;

enum class SolutionKind { KaehlerEinstein, NonKaehler, Normal };
std::string to_string(SolutionKind k);

struct EinsteinSolution {
    MetricParams metric;  // x1 = 1
    double einstein_constant = 0;
    double residual = 0;
    SolutionKind kind = SolutionKind::NonKaehler;
    int ordering = -1;  // Kaehler-Einstein only
};

std::vector<double> ricci_components(const SpaceModel& m, const MetricParams& x);
// (r1 - r2, r2 - r3, r3 - r4)
std::vector<double> einstein_residual(const SpaceModel& m, const MetricParams& x);
// Max-norm of the residual after rescaling to x1 = 1.
double residual_norm(const SpaceModel& m, const MetricParams& x);

MetricParams normalize_first(const MetricParams& x);
// Rescale so that entry `index` (0-based) is 1.
MetricParams to_gauge(const MetricParams& x, int index);
double relative_distance(const MetricParams& a, const MetricParams& b);

struct SolverOptions {
    int starts = 2000;  // at least 1000
    std::uint64_t seed = 1;
    double box_lo = 0.05;
    double box_hi = 20.0;
    double dedup_tol = 1e-6;
    double ke_tol = 1e-8;
    int threads = 0;  // 0: hardware concurrency
};

// Multi-start damped Newton in log coordinates with x1 = 1, then a 50-digit polish.
// The result is sorted lexicographically and does not depend on the seed once the
// basins are covered.
std::vector<EinsteinSolution> solve_all(const SpaceModel& m, const SolverOptions& opt = {});

// Tags a metric against the model's Kaehler-Einstein list.
EinsteinSolution classify_solution(const SpaceModel& m, const MetricParams& x, double ke_tol = 1e-8);

enum class ClosedFormFamily {
    SOOddIIa,    // SO(2l+1)/U(1)xU(1)xSO(2l-3):  x1 = x4 = 1, x2 = x3
    SOEvenIIa,   // SO(2l)/U(1)xU(1)xSO(2l-4):    x1 = x4 = 1, x2 = x3
    SO4pSym,     // SO(4p)/U(p)xU(p):  x2 = x4 = 1, x1 = x3
    SO4pSkew,    // SO(4p)/U(p)xU(p):  x2 = 1, x1 = x3, x4 free
    Sp2p,        // Sp(2p)/U(p)xU(p):  x2 = x4 = 1
};

// Metrics in the gauge quoted above; throws std::invalid_argument out of range.
std::vector<MetricParams> closed_forms(ClosedFormFamily f, int param);

struct QuarticAnalysis {
    int ell = 0, p = 0;
    RationalVector coeffs;  // F, constant term first
    Rational zeta, F_at_half, F_at_zeta, F_at_right, Q_value;
    std::optional<Rational> F_at_half_ell;  // F(l/2) when p = l - 2
    bool sign_condition = false;           // F positive at zeta, or at l/2 when p = l - 2
    int sturm_count = 0;                   // distinct roots in the open window
    std::vector<double> roots_in_window;
    std::vector<MetricParams> metrics;  // (x1, 1, x1, x4)
    std::vector<double> residuals;
};

// SO(2l)/U(p)xU(l-p), metrics of the form (x1, 1, x1, x4).
QuarticAnalysis quartic_analysis(int ell, int p);

}  // namespace flagein
