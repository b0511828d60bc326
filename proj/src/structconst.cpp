#include "flagein/structconst.hpp"

#include "flagein/kahler.hpp"
#include "flagein/ricci.hpp"

#include <stdexcept>

namespace flagein {

namespace {

struct LinearRicci {
    std::vector<RationalVector> base;                // 1/(2 x_k)
    std::map<TripleKey, std::vector<Rational>> per;  // coefficient of each triple in r_k
};

LinearRicci linearize(const Decomposition& dec, const RationalVector& x)
{
    const int n = dec.size();
    LinearRicci lr;
    for (const TripleKey& key : bracket_support(dec)) {
        TripleTable unit(n);
        unit.set(key[0], key[1], key[2], 1);
        auto r = ricci_generic<Rational>(dec.dims(), unit, x);
        for (int k = 0; k < n; ++k) r[k] -= Rational(1) / (2 * x[k]);
        lr.per[key] = r;
    }
    return lr;
}

RationalVector natural_ke(const Decomposition& dec)
{
    auto ords = enumerate_invariant_orderings(dec);
    return ke_metric(dec, ords.front()).values;
}

// Rows of r_k - r_(k+1) = 0 as  sum_s c_s A[k][s] = b[k].
void difference_system(const Decomposition& dec, const RationalVector& x, const std::vector<TripleKey>& keys,
                       RationalMatrix& A, RationalVector& b)
{
    LinearRicci lr = linearize(dec, x);
    const int n = dec.size();
    A.assign(n - 1, RationalVector(keys.size()));
    b.assign(n - 1, Rational(0));
    for (int k = 0; k + 1 < n; ++k) {
        b[k] = -(Rational(1) / (2 * x[k]) - Rational(1) / (2 * x[k + 1]));
        for (std::size_t s = 0; s < keys.size(); ++s) A[k][s] = lr.per[keys[s]][k] - lr.per[keys[s]][k + 1];
    }
}

}  // namespace

TripleTable TypeIFamily::at(const Rational& c224) const
{
    TripleTable t(4);
    t.set(1, 1, 3, c224);
    for (const auto& [key, ab] : coeffs) t.set(key[0], key[1], key[2], ab.first + ab.second * c224);
    return t;
}

TripleTable triples_from_ke(const Decomposition& dec)
{
    if (dec.type != SpaceType::TypeIIa && dec.type != SpaceType::TypeIIb)
        throw std::invalid_argument("triples_from_ke: Type II decomposition required");
    RationalVector x = natural_ke(dec);
    std::vector<TripleKey> keys = bracket_support(dec);
    if (keys.size() != 2) throw std::domain_error("triples_from_ke: unexpected bracket support");
    RationalMatrix A;
    RationalVector b;
    difference_system(dec, x, keys, A, b);
    RationalVector c = solve({A[0], A[1]}, {b[0], b[1]});
    if (A[2][0] * c[0] + A[2][1] * c[1] != b[2]) throw std::domain_error("triples_from_ke: redundant equation fails");
    TripleTable t(dec.size());
    for (std::size_t s = 0; s < keys.size(); ++s) t.set(keys[s][0], keys[s][1], keys[s][2], c[s]);
    return t;
}

TypeIFamily triples_family_type1(const Decomposition& dec)
{
    if (dec.type != SpaceType::TypeI) throw std::invalid_argument("triples_family_type1: Type I required");
    RationalVector x = natural_ke(dec);
    const TripleKey free_key{1, 1, 3};
    std::vector<TripleKey> keys;
    for (const auto& key : bracket_support(dec))
        if (key != free_key) keys.push_back(key);
    if (keys.size() != 3) throw std::domain_error("triples_family_type1: unexpected bracket support");
    std::vector<TripleKey> all = keys;
    all.push_back(free_key);
    RationalMatrix A;
    RationalVector b;
    difference_system(dec, x, all, A, b);
    RationalMatrix A3(3, RationalVector(3));
    RationalVector col(3);
    for (int k = 0; k < 3; ++k) {
        for (int s = 0; s < 3; ++s) A3[k][s] = A[k][s];
        col[k] = -A[k][3];
    }
    RationalVector a = solve(A3, b);
    RationalVector slope = solve(A3, col);
    TypeIFamily fam;
    for (int s = 0; s < 3; ++s) fam.coeffs[keys[s]] = {a[s], slope[s]};
    return fam;
}

TwistorData triples_twistor(const Decomposition& dec)
{
    if (dec.type != SpaceType::TypeI) throw std::invalid_argument("triples_twistor: Type I required");
    const Family f = dec.root_system().family().family;
    const int node = dec.diagram.painted.front();
    TwistorData td;
    if (f == Family::F4 && node == 3) {
        td = {"F4/SO(9)", "SO(9)/U(3)xSO(3)", 0, make_rational(14, 18)};
    } else if (f == Family::E7 && node == 4) {
        td = {"E7/SO(12)xSU(2)", "SO(12)/U(3)xSO(6)", 0, make_rational(20, 36)};
    } else if (f == Family::E8 && node == 3) {
        td = {"E8/SO(16)", "SO(16)/U(3)xSO(10)", 0, make_rational(28, 60)};
    } else if (f == Family::E8 && node == 6) {
        td = {"E8/E7xSU(2)", "E7/SU(7)xU(1)", 0, make_rational(36, 60)};
    } else {
        throw std::invalid_argument("triples_twistor: no fibration data for this space");
    }
    td.killing_ratio.canonicalize();
    // the fiber is a two-summand flag manifold with tangent space m2 + m4
    const int d2 = dec.summands[1].dim, d4 = dec.summands[3].dim;
    td.fiber_triple_prime = make_rational(d2 * d4, d2 + 4 * d4);
    td.fiber_triple_prime.canonicalize();
    return td;
}

TripleTable triples_exact(const Decomposition& dec)
{
    if (dec.type == SpaceType::TypeI) return triples_family_type1(dec).at(triples_twistor(dec).value());
    return triples_from_ke(dec);
}

// With B(E_a, E_-a) = -1 the E_a form a unitary basis of the complexified summands, so
// the real sum of squares equals sum |N_ab|^2 over complex root triples, and
// N_ab^2 = q(1+p)/2 (a,a)_B.  No further factor is needed.
Rational direct_multiplicity() { return 1; }

TripleTable triples_direct(const Decomposition& dec)
{
    const RootSystem& rs = dec.root_system();
    const int n = dec.size();
    std::vector<Root> rm;
    std::vector<int> where;
    for (int k = 0; k < n; ++k)
        for (const Root& a : dec.summands[k].members) {
            rm.push_back(a);
            where.push_back(k);
            rm.push_back(-a);
            where.push_back(k);
        }
    std::map<Root, int> idx;
    for (std::size_t i = 0; i < rm.size(); ++i) idx[rm[i]] = where[i];

    std::vector<Rational> ordered(n * n * n);
    for (std::size_t a = 0; a < rm.size(); ++a) {
        Rational aa = rs.killing_scale() * rs.inner_product(rm[a], rm[a]);
        for (std::size_t b = 0; b < rm.size(); ++b) {
            auto it = idx.find(rm[a] + rm[b]);
            if (it == idx.end()) continue;
            auto [p, q] = rs.root_string(rm[a], rm[b]);
            ordered[(where[a] * n + where[b]) * n + it->second] += Rational(q * (1 + p)) * aa / 2;
        }
    }
    TripleTable t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Rational& v = ordered[(i * n + j) * n + k];
                if (v != ordered[(k * n + i) * n + j] || v != ordered[(j * n + i) * n + k])
                    throw std::logic_error("triples_direct: asymmetric sums");
                if (i <= j && j <= k && v != 0) t.set(i, j, k, v * direct_multiplicity());
            }
    return t;
}

}  // namespace flagein
