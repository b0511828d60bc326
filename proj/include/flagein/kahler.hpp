#pragma once

#include "flagein/flagdecomp.hpp"

#include <vector>

namespace flagein {

struct KoszulForm {
    RationalVector root_coeffs;  // 2 delta_m over the simple roots
    Weight weight_coeffs;        // delta_m over the fundamental weights
};

struct KEMetric {
    int ordering = 0;
    RationalVector values;      // (delta_m, lowest weight), long roots of squared length 1
    RationalVector normalized;  // values rescaled so the first entry is `leading`
};

// Positive complementary roots picked out by an ordering.
std::vector<Root> positive_complementary(const Decomposition& dec, const InvariantOrdering& ord);

KoszulForm koszul_form(const Decomposition& dec, const InvariantOrdering& ord);

KEMetric ke_metric(const Decomposition& dec, const InvariantOrdering& ord, const Rational& leading = 1);

// One metric per ordering class, in ordering id order.
std::vector<KEMetric> ke_metrics(const Decomposition& dec, const Rational& leading = 1);

}  // namespace flagein
