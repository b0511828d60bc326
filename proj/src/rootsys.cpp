#include "flagein/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagein {

namespace {

int fixed_rank(Family f)
{
    switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
    }
}

struct Diagram {
    RationalVector length2;                  // squared lengths
    std::vector<std::pair<int, int>> edges;  // 0-based
};

Diagram diagram_of(const LieFamily& lf)
{
    const int n = lf.rank;
    Diagram d;
    d.length2.assign(n, Rational(2));
    auto chain = [&](int from, int to) {
        for (int i = from; i + 1 <= to; ++i) d.edges.emplace_back(i, i + 1);
    };
    switch (lf.family) {
    case Family::A: chain(0, n - 1); break;
    case Family::B:
        chain(0, n - 1);
        d.length2[n - 1] = 1;
        break;
    case Family::C:
        chain(0, n - 1);
        for (int i = 0; i < n - 1; ++i) d.length2[i] = 1;
        break;
    case Family::D:
        chain(0, n - 2);
        d.edges.emplace_back(n - 3, n - 1);
        break;
    case Family::E6:
        chain(0, 4);
        d.edges.emplace_back(2, 5);
        break;
    case Family::E7:
        chain(0, 5);
        d.edges.emplace_back(3, 6);
        break;
    case Family::E8:
        chain(0, 6);
        d.edges.emplace_back(4, 7);
        break;
    case Family::F4:
        chain(0, 3);
        d.length2[2] = d.length2[3] = 1;
        break;
    case Family::G2:
        chain(0, 1);
        d.length2[0] = make_rational(2, 3);
        break;
    }
    return d;
}

int dual_coxeter_of(const LieFamily& lf)
{
    const int n = lf.rank;
    switch (lf.family) {
    case Family::A: return n + 1;
    case Family::B: return 2 * n - 1;
    case Family::C: return n + 1;
    case Family::D: return 2 * n - 2;
    case Family::E6: return 12;
    case Family::E7: return 18;
    case Family::E8: return 30;
    case Family::F4: return 9;
    case Family::G2: return 4;
    }
    return 0;
}

std::vector<int> bourbaki_of(const LieFamily& lf)
{
    switch (lf.family) {
    case Family::E6: return {1, 3, 4, 5, 6, 2};
    case Family::E7: return {7, 6, 5, 4, 3, 1, 2};
    case Family::E8: return {8, 7, 6, 5, 4, 3, 1, 2};
    default: {
        std::vector<int> id(lf.rank);
        std::iota(id.begin(), id.end(), 1);
        return id;
    }
    }
}

bool root_less(const Root& a, const Root& b)
{
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

}  // namespace

LieFamily::LieFamily(Family f, int r) : family(f), rank(r)
{
    int fr = fixed_rank(f);
    if (fr) {
        if (rank <= 0) rank = fr;
        if (rank != fr) throw std::invalid_argument("exceptional family has fixed rank");
        return;
    }
    int lo = f == Family::A ? 1 : f == Family::D ? 3 : 2;
    if (rank < lo) throw std::invalid_argument("rank out of range for family");
}

bool LieFamily::exceptional() const { return fixed_rank(family) != 0; }

std::string LieFamily::name() const
{
    switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    }
    return "?";
}

Root operator+(const Root& a, const Root& b)
{
    Root r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Root operator-(const Root& a, const Root& b)
{
    Root r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Root operator-(const Root& a)
{
    Root r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

std::string format_root(const Root& r)
{
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        int c = r[i];
        if (!c) continue;
        if (c < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (std::abs(c) != 1) s += std::to_string(std::abs(c));
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

RootSystem::RootSystem(LieFamily f) : family_(f)
{
    const int n = f.rank;
    Diagram d = diagram_of(f);
    gram_.assign(n, RationalVector(n));
    for (int i = 0; i < n; ++i) gram_[i][i] = d.length2[i];
    for (auto [i, j] : d.edges) {
        Rational v = -std::max(d.length2[i], d.length2[j]) / 2;
        gram_[i][j] = gram_[j][i] = v;
    }
    cartan_.assign(n, std::vector<int>(n));
    RationalMatrix cq(n, RationalVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational a = 2 * gram_[i][j] / gram_[j][j];
            if (a.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
            cartan_[i][j] = static_cast<int>(a.get_num().get_si());
            cq[i][j] = a;
        }
    cartan_inv_ = inverse(cq);
    dual_coxeter_ = dual_coxeter_of(f);
    killing_scale_ = make_rational(1, 2 * dual_coxeter_);
    bourbaki_ = bourbaki_of(f);

    // Closure by simple-root strings, one height level at a time.
    std::map<Root, int> seen;
    std::vector<Root> level;
    for (int i = 0; i < n; ++i) {
        level.push_back(simple_root(i));
        seen[level.back()] = 1;
    }
    while (!level.empty()) {
        std::vector<Root> next;
        for (const Root& b : level) {
            positive_.push_back(b);
            for (int i = 0; i < n; ++i) {
                Root a = simple_root(i);
                int p = 0;
                for (Root c = b - a; seen.count(c); c = c - a) ++p;
                int pair = 0;
                for (int j = 0; j < n; ++j) pair += b[j] * cartan_[j][i];
                int q = p - pair;
                if (q > 0) {
                    Root c = b + a;
                    if (!seen.count(c)) {
                        seen[c] = 1;
                        next.push_back(c);
                    }
                }
            }
        }
        level = std::move(next);
    }
    std::sort(positive_.begin(), positive_.end(), root_less);
    highest_ = positive_.back();
    roots_ = positive_;
    for (const Root& r : positive_) roots_.push_back(-r);
    for (std::size_t k = 0; k < roots_.size(); ++k) index_[roots_[k]] = static_cast<int>(k);
}

Root RootSystem::simple_root(int i) const
{
    Root r(rank(), 0);
    r.at(i) = 1;
    return r;
}

int RootSystem::index_of(const Root& r) const
{
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

Rational RootSystem::inner_product(const Root& u, const Root& v) const
{
    if (static_cast<int>(u.size()) != rank() || static_cast<int>(v.size()) != rank())
        throw std::invalid_argument("inner_product: dimension mismatch");
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < rank(); ++j)
            if (v[j]) s += gram_[i][j] * (u[i] * v[j]);
    }
    return s;
}

Rational RootSystem::inner_product(const RationalVector& u, const RationalVector& v) const
{
    if (static_cast<int>(u.size()) != rank() || static_cast<int>(v.size()) != rank())
        throw std::invalid_argument("inner_product: dimension mismatch");
    Rational s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += gram_[i][j] * u[i] * v[j];
    return s;
}

// (Lambda_i, alpha_j) = delta_ij (alpha_j, alpha_j) / 2
Rational RootSystem::inner_product_weight(const Weight& w, const RationalVector& c) const
{
    if (static_cast<int>(w.size()) != rank() || static_cast<int>(c.size()) != rank())
        throw std::invalid_argument("inner_product: dimension mismatch");
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) s += w[i] * c[i] * gram_[i][i] / 2;
    return s;
}

Rational RootSystem::inner_product_weights(const Weight& a, const Weight& b) const
{
    return inner_product_weight(a, to_root_coords(b));
}

Weight RootSystem::to_weight(const RationalVector& c) const
{
    Weight w(rank());
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) w[j] += c[i] * cartan_[i][j];
    return w;
}

RationalVector RootSystem::to_root_coords(const Weight& w) const
{
    RationalVector c(rank());
    for (int j = 0; j < rank(); ++j)
        for (int i = 0; i < rank(); ++i) c[i] += w[j] * cartan_inv_[j][i];
    return c;
}

std::pair<int, int> RootSystem::root_string(const Root& a, const Root& b) const
{
    if (!is_root(a)) throw std::invalid_argument("root_string: first argument is not a root");
    int p = 0, q = 0;
    for (Root c = b - a; is_root(c); c = c - a) ++p;
    for (Root c = b + a; is_root(c); c = c + a) ++q;
    return {p, q};
}

int RootSystem::bourbaki_label(int node) const { return bourbaki_.at(node - 1); }

std::string RootSystem::serialize() const
{
    std::ostringstream os;
    os << "family " << family_.name() << "\nrank " << rank() << "\nroots " << roots_.size() << "\n";
    for (const Root& r : roots_) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
        os << "\n";
    }
    return os.str();
}

}  // namespace flagein
