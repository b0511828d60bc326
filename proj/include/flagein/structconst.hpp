#pragma once

#include "flagein/flagdecomp.hpp"
#include "flagein/triples.hpp"

#include <map>
#include <string>
#include <utility>

namespace flagein {

// Type I: [112], [123], [134] as affine functions a + b*[224].
struct TypeIFamily {
    std::map<TripleKey, std::pair<Rational, Rational>> coeffs;
    TripleTable at(const Rational& c224) const;
};

struct TwistorData {
    std::string symmetric_space;   // G/U
    std::string fiber;             // U'/K'
    Rational fiber_triple_prime;   // [224] of the fiber with its own Killing form
    Rational killing_ratio;        // B_U' = c B_G
    Rational value() const { return killing_ratio * fiber_triple_prime; }
};

// The Kaehler-Einstein metric of the natural ordering fed into r1 = r2 = r3 = r4.
// Type II only; throws std::domain_error if the linear system is singular or the
// redundant equation fails.
TripleTable triples_from_ke(const Decomposition& dec);
TypeIFamily triples_family_type1(const Decomposition& dec);

TwistorData triples_twistor(const Decomposition& dec);

// triples_from_ke, completed by the twistor value for Type I.
TripleTable triples_exact(const Decomposition& dec);

// Sum of squared structure constants over root triples.
TripleTable triples_direct(const Decomposition& dec);

// Constant turning the raw root-string sums into [ijk].
Rational direct_multiplicity();

}  // namespace flagein
