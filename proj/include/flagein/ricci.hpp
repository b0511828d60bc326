#pragma once

#include "flagein/flagdecomp.hpp"
#include "flagein/triples.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace flagein {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

template <class T>
T from_rational(const Rational& q)
{
    if constexpr (std::is_same_v<T, Rational>) {
        return q;
    } else if constexpr (std::is_floating_point_v<T>) {
        return static_cast<T>(q.get_d());
    } else {
        return T(q.get_num().get_str()) / T(q.get_den().get_str());
    }
}

template <class T>
void require_positive(const std::vector<T>& x)
{
    for (const T& v : x)
        if (!(v > 0)) throw std::invalid_argument("metric entries must be positive");
}

// Ricci components of the diagonal metric sum x_k (-B)|m_k, by direct summation:
//   r_k = 1/(2x_k) + 1/(4d_k) sum_{i,j} x_k/(x_i x_j)[ijk] - 1/(2d_k) sum_{i,j} x_j/(x_k x_i)[kij]
template <class T>
std::vector<T> ricci_generic(const std::vector<int>& d, const TripleTable& t, const std::vector<T>& x)
{
    require_positive(x);
    const int n = static_cast<int>(x.size());
    if (static_cast<int>(d.size()) != n || t.size() != n) throw std::invalid_argument("ricci: size mismatch");
    std::vector<T> r(n);
    for (int k = 0; k < n; ++k) {
        T plus = 0, minus = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational c = t.get(i, j, k);
                if (c == 0) continue;
                T cv = from_rational<T>(c);
                plus += cv * x[k] / (x[i] * x[j]);
                minus += cv * x[j] / (x[k] * x[i]);
            }
        T dk = T(d[k]);
        r[k] = T(1) / (2 * x[k]) + plus / (4 * dk) - minus / (2 * dk);
    }
    return r;
}

namespace detail {

// Contribution of a triple with distinct indices to r_k: the other two are i and j.
template <class T>
T mixed(const T& c, const T& dk, const T& xk, const T& xi, const T& xj)
{
    return c / (2 * dk) * (xk / (xi * xj) - xi / (xj * xk) - xj / (xi * xk));
}

}  // namespace detail

// Closed forms for the three four-summand shapes.  Type I uses [112], [123], [134], [224];
// Type IIa uses [123], [234]; Type IIb uses [123], [134].
template <class T>
std::vector<T> ricci_specialized(SpaceType type, const std::vector<int>& d, const TripleTable& t,
                                 const std::vector<T>& x)
{
    require_positive(x);
    if (x.size() != 4 || d.size() != 4) throw std::invalid_argument("specialized Ricci needs four summands");
    using detail::mixed;
    const T x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
    const T d1 = T(d[0]), d2 = T(d[1]), d3 = T(d[2]), d4 = T(d[3]);
    const T c123 = from_rational<T>(t.get(0, 1, 2));
    std::vector<T> r(4);
    switch (type) {
    case SpaceType::TypeI: {
        const T c112 = from_rational<T>(t.get(0, 0, 1));
        const T c134 = from_rational<T>(t.get(0, 2, 3));
        const T c224 = from_rational<T>(t.get(1, 1, 3));
        r[0] = 1 / (2 * x1) - c112 / (2 * d1) * x2 / (x1 * x1) + mixed(c123, d1, x1, x2, x3) + mixed(c134, d1, x1, x3, x4);
        r[1] = 1 / (2 * x2) - c224 / (2 * d2) * x4 / (x2 * x2) + c112 / (4 * d2) * (x2 / (x1 * x1) - 2 / x2) +
               mixed(c123, d2, x2, x1, x3);
        r[2] = 1 / (2 * x3) + mixed(c123, d3, x3, x1, x2) + mixed(c134, d3, x3, x1, x4);
        r[3] = 1 / (2 * x4) + c224 / (4 * d4) * (x4 / (x2 * x2) - 2 / x4) + mixed(c134, d4, x4, x1, x3);
        break;
    }
    case SpaceType::TypeIIa: {
        const T c234 = from_rational<T>(t.get(1, 2, 3));
        r[0] = 1 / (2 * x1) + mixed(c123, d1, x1, x2, x3);
        r[1] = 1 / (2 * x2) + mixed(c123, d2, x2, x1, x3) + mixed(c234, d2, x2, x3, x4);
        r[2] = 1 / (2 * x3) + mixed(c123, d3, x3, x1, x2) + mixed(c234, d3, x3, x2, x4);
        r[3] = 1 / (2 * x4) + mixed(c234, d4, x4, x2, x3);
        break;
    }
    case SpaceType::TypeIIb: {
        const T c134 = from_rational<T>(t.get(0, 2, 3));
        r[0] = 1 / (2 * x1) + mixed(c123, d1, x1, x2, x3) + mixed(c134, d1, x1, x3, x4);
        r[1] = 1 / (2 * x2) + mixed(c123, d2, x2, x1, x3);
        r[2] = 1 / (2 * x3) + mixed(c123, d3, x3, x1, x2) + mixed(c134, d3, x3, x1, x4);
        r[3] = 1 / (2 * x4) + mixed(c134, d4, x4, x1, x3);
        break;
    }
    default: throw std::invalid_argument("no closed form for this space type");
    }
    return r;
}

// The generic formula expanded into Laurent monomials; used by the solver for
// fast evaluation and exact Jacobians.
class RicciSystem {
public:
    struct Term {
        double coef;
        HighPrecision coef_hp;
        std::vector<int> exps;
    };

    RicciSystem(const std::vector<int>& d, const TripleTable& t);

    int size() const { return n_; }
    const std::vector<std::vector<Term>>& components() const { return terms_; }

    template <class T>
    void eval(const std::vector<T>& x, std::vector<T>& r, std::vector<std::vector<T>>* jac = nullptr) const
    {
        r.assign(n_, T(0));
        if (jac) jac->assign(n_, std::vector<T>(n_, T(0)));
        std::vector<T> inv(n_);
        for (int i = 0; i < n_; ++i) inv[i] = 1 / x[i];
        for (int k = 0; k < n_; ++k)
            for (const Term& term : terms_[k]) {
                T v;
                if constexpr (std::is_same_v<T, HighPrecision>) v = term.coef_hp;
                else v = static_cast<T>(term.coef);
                for (int i = 0; i < n_; ++i) v *= power(x[i], inv[i], term.exps[i]);
                r[k] += v;
                if (jac)
                    for (int i = 0; i < n_; ++i)
                        if (term.exps[i]) (*jac)[k][i] += v * term.exps[i] * inv[i];
            }
    }

private:
    template <class T>
    static T power(const T& x, const T& inv, int e)
    {
        T v = 1;
        for (int a = 0; a < e; ++a) v *= x;
        for (int a = 0; a < -e; ++a) v *= inv;
        return v;
    }

    int n_ = 0;
    std::vector<std::vector<Term>> terms_;
};

}  // namespace flagein
