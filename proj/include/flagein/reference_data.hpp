#pragma once

#include "flagein/rational.hpp"
#include "flagein/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flagein::reference {

// Reference values as printed.  Rounded decimals keep their printed digits.

struct TypeIRow {
    std::string alias;  // parse_space alias
    std::vector<int> dims;
    Rational c112, c123, c134, c224;
    std::vector<std::vector<double>> einstein;  // non-Kaehler solutions, x1 = 1, 4 decimals
    std::vector<double> scale_invariants;       // KE first, then the rows of `einstein`
};
const std::vector<TypeIRow>& type1();

struct TypeIIaExceptionalRow {
    std::string alias;
    std::vector<int> dims;
    Rational c123, c234;
    std::vector<int> ke;                        // natural ordering, normalized
    std::vector<std::vector<double>> einstein;  // labels (a)..(h), 6 significant digits
};
const std::vector<TypeIIaExceptionalRow>& type2a_exceptional();

// Scale invariants of E6 (a)..(h); entries with equal printed values are shared.
const std::vector<double>& e6_scale_invariants();

// The four Type II series.  `p` is ignored for the IIa series.
enum class Series { SOOdd, SOEven, Sp, SOEvenP };
std::string series_name(Series s);
std::string series_alias(Series s, int ell, int p);
bool series_valid(Series s, int ell, int p);
std::vector<int> series_dims(Series s, int ell, int p);
// [123] and the second nonzero triple ([234] for IIa, [134] for IIb).
std::pair<Rational, Rational> series_triples(Series s, int ell, int p);
// Natural-ordering Kaehler-Einstein metric in the reference normalization.
RationalVector series_ke(Series s, int ell, int p);

// delta_m for E6 with {a1, a2} painted, over the fundamental weights.
RationalVector e6_koszul_weights();

struct CountRow {
    std::string label;
    std::string alias;
    int count;
};
// Number of invariant Einstein metrics for four-summand spaces with small parameters.
std::vector<CountRow> solution_counts();

}  // namespace flagein::reference
