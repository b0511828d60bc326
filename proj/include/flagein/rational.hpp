#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace flagein {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "n", "n/d" and surrounding whitespace; throws std::invalid_argument.
Rational parse_rational(const std::string& s);

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Exact inverse by Gauss-Jordan elimination; throws on a singular matrix.
RationalMatrix inverse(const RationalMatrix& m);

// Solves m x = b exactly; throws std::domain_error when m is singular.
RationalVector solve(RationalMatrix m, RationalVector b);

}  // namespace flagein
