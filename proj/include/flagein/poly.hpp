#pragma once

#include "flagein/rational.hpp"

#include <utility>
#include <vector>

namespace flagein {

// Dense univariate polynomial over Q, constant term first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RationalVector c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool zero() const { return c_.empty(); }
    const RationalVector& coeffs() const { return c_; }
    const Rational& lead() const { return c_.back(); }

    Rational operator()(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial operator-() const;
    // Remainder of division by d.
    Polynomial mod(const Polynomial& d) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim();
    RationalVector c_;
};

std::vector<Polynomial> sturm_sequence(const Polynomial& p);

// Number of distinct real roots in (a, b]; a and b must not be roots.
int sturm_count(const std::vector<Polynomial>& seq, const Rational& a, const Rational& b);

// Disjoint intervals (lo, hi), each holding exactly one root of p in (a, b), refined until
// hi - lo <= width.  Exact roots hit during bisection come back as lo == hi.
std::vector<std::pair<Rational, Rational>> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                                         const Rational& width);

}  // namespace flagein
