#include "flagein/flagdecomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace flagein {

PaintedDiagram::PaintedDiagram(std::shared_ptr<const RootSystem> rs, std::vector<int> nodes)
    : root_system(std::move(rs)), painted(std::move(nodes))
{
    if (!root_system) throw std::invalid_argument("painted diagram needs a root system");
    std::sort(painted.begin(), painted.end());
    painted.erase(std::unique(painted.begin(), painted.end()), painted.end());
    if (painted.empty()) throw std::invalid_argument("painted set is empty");
    for (int v : painted)
        if (v < 1 || v > root_system->rank()) throw std::invalid_argument("painted node out of range");
}

std::vector<int> PaintedDiagram::white() const
{
    std::vector<int> w;
    for (int i = 1; i <= root_system->rank(); ++i)
        if (!is_painted(i)) w.push_back(i);
    return w;
}

bool PaintedDiagram::is_painted(int node) const
{
    return std::binary_search(painted.begin(), painted.end(), node);
}

std::string to_string(SpaceType t)
{
    switch (t) {
    case SpaceType::TypeI: return "I";
    case SpaceType::TypeIIa: return "IIa";
    case SpaceType::TypeIIb: return "IIb";
    case SpaceType::Other: return "other";
    }
    return "?";
}

std::vector<int> Decomposition::dims() const
{
    std::vector<int> d;
    for (const auto& s : summands) d.push_back(s.dim);
    return d;
}

TRoot Decomposition::restrict(const Root& a) const
{
    TRoot t;
    for (int v : diagram.painted) t.push_back(a[v - 1]);
    return t;
}

int Decomposition::summand_of(const TRoot& xi, int* sign) const
{
    TRoot neg(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) neg[i] = -xi[i];
    for (int k = 0; k < size(); ++k) {
        if (summands[k].troot == xi) {
            if (sign) *sign = 1;
            return k;
        }
        if (summands[k].troot == neg) {
            if (sign) *sign = -1;
            return k;
        }
    }
    return -1;
}

namespace {

std::vector<TRoot> canonical_order(std::vector<TRoot> ts, std::size_t npainted)
{
    auto by_height = [](const TRoot& a, const TRoot& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        return std::tie(ha, a) < std::tie(hb, b);
    };
    std::sort(ts.begin(), ts.end(), by_height);
    if (ts.size() != 4 || npainted != 2) return ts;
    std::vector<TRoot> head = {{1, 0}, {0, 1}, {1, 1}};
    std::vector<TRoot> out;
    for (const auto& h : head)
        if (std::find(ts.begin(), ts.end(), h) != ts.end()) out.push_back(h);
    if (out.size() != 3) return ts;
    for (const auto& t : ts)
        if (std::find(head.begin(), head.end(), t) == head.end()) out.push_back(t);
    return out;
}

}  // namespace

Decomposition decompose(const PaintedDiagram& pd)
{
    Decomposition dec{pd, {}, {}, {}, SpaceType::Other};
    const RootSystem& rs = *pd.root_system;
    std::map<TRoot, std::vector<Root>> groups;
    for (const Root& a : rs.positive_roots()) {
        TRoot t = dec.restrict(a);
        bool zero = std::all_of(t.begin(), t.end(), [](int c) { return c == 0; });
        if (zero) {
            dec.r_k_plus.push_back(a);
        } else {
            dec.r_m_plus.push_back(a);
            groups[t].push_back(a);
        }
    }
    std::vector<TRoot> ts;
    for (auto& [t, _] : groups) ts.push_back(t);
    for (const TRoot& t : canonical_order(ts, pd.painted.size())) {
        IsotropySummand s;
        s.troot = t;
        s.members = groups[t];
        s.dim = 2 * static_cast<int>(s.members.size());
        s.highest_weight = s.members.front();
        for (const Root& m : s.members)
            for (std::size_t i = 0; i < m.size(); ++i)
                s.highest_weight[i] = std::max(s.highest_weight[i], m[i]);
        dec.summands.push_back(std::move(s));
    }
    for (int k = 0; k < dec.size(); ++k) dec.summands[k].lowest_weight = lowest_weight(dec, k);

    if (dec.size() == 4) {
        if (pd.painted.size() == 1) {
            dec.type = SpaceType::TypeI;
        } else if (pd.painted.size() == 2) {
            int h = rs.highest_root()[pd.painted[0] - 1];
            dec.type = h == 1 ? SpaceType::TypeIIa : SpaceType::TypeIIb;
        }
    }
    return dec;
}

Root lowest_weight(const Decomposition& dec, int k, int sign)
{
    const RootSystem& rs = dec.root_system();
    std::vector<Root> found;
    for (const Root& m : dec.summands.at(k).members) {
        Root a = sign > 0 ? m : -m;
        bool simple = std::none_of(dec.r_k_plus.begin(), dec.r_k_plus.end(),
                                   [&](const Root& phi) { return rs.is_root(a - phi); });
        if (simple) found.push_back(a);
    }
    if (found.size() != 1) throw std::logic_error("summand has no unique K-simple root");
    return found.front();
}

long weyl_dim(const Decomposition& dec, int k)
{
    const RootSystem& rs = dec.root_system();
    const Root& lambda = dec.summands.at(k).highest_weight;
    RationalVector delta(rs.rank());
    for (const Root& a : dec.r_k_plus)
        for (int i = 0; i < rs.rank(); ++i) delta[i] += make_rational(a[i], 2);
    RationalVector lam(lambda.begin(), lambda.end());
    Rational prod = 1;
    for (const Root& a : dec.r_k_plus) {
        RationalVector av(a.begin(), a.end());
        prod *= 1 + rs.inner_product(lam, av) / rs.inner_product(delta, av);
    }
    if (prod.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
    return prod.get_num().get_si();
}

namespace {

struct Vec2 {
    long x, y;
};

bool upper(const Vec2& v) { return v.y > 0 || (v.y == 0 && v.x > 0); }
long cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

bool angle_less(const Vec2& a, const Vec2& b)
{
    bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    return cross(a, b) > 0;
}

}  // namespace

std::vector<InvariantOrdering> enumerate_invariant_orderings(const Decomposition& dec)
{
    const std::size_t np = dec.diagram.painted.size();
    const int n = dec.size();
    std::vector<std::vector<int>> cells;  // counterclockwise
    if (np == 1) {
        cells.push_back(std::vector<int>(n, 1));
        cells.push_back(std::vector<int>(n, -1));
    } else if (np == 2) {
        std::vector<Vec2> dirs;
        for (const auto& s : dec.summands) {
            Vec2 d{-s.troot[1], s.troot[0]};
            dirs.push_back(d);
            dirs.push_back({-d.x, -d.y});
        }
        std::sort(dirs.begin(), dirs.end(), angle_less);
        std::vector<Vec2> uniq;
        for (const auto& d : dirs)
            if (uniq.empty() || angle_less(uniq.back(), d)) uniq.push_back(d);
        for (std::size_t i = 0; i < uniq.size(); ++i) {
            const Vec2& a = uniq[i];
            const Vec2& b = uniq[(i + 1) % uniq.size()];
            Vec2 mid{a.x + b.x, a.y + b.y};
            std::vector<int> signs;
            for (const auto& s : dec.summands) {
                long v = s.troot[0] * mid.x + s.troot[1] * mid.y;
                signs.push_back(v > 0 ? 1 : -1);
            }
            cells.push_back(signs);
        }
    } else {
        throw std::invalid_argument("orderings are only enumerated for one or two painted nodes");
    }

    const int m = static_cast<int>(cells.size());
    const int half = m / 2;
    std::vector<int> all_pos(n, 1);
    int nat = static_cast<int>(std::find(cells.begin(), cells.end(), all_pos) - cells.begin());
    if (nat == m) throw std::logic_error("natural ordering cell not found");

    std::vector<InvariantOrdering> out(m);
    for (int i = 0; i < half; ++i) {
        int c = ((nat - i) % m + m) % m;
        out[i].id = i;
        out[i].signs = cells[c];
        out[i].negation = i + half;
        out[i].natural = i == 0;
        std::vector<int> neg = cells[c];
        for (int& s : neg) s = -s;
        out[i + half].id = i + half;
        out[i + half].signs = neg;
        out[i + half].negation = i;
    }
    return out;
}

std::string subdiagram_type(const RootSystem& rs, const std::vector<int>& nodes)
{
    const auto& A = rs.cartan_matrix();
    std::set<int> left(nodes.begin(), nodes.end());
    std::vector<std::string> names;
    auto nbrs = [&](int v, const std::set<int>& in) {
        std::vector<int> out;
        for (int u : in)
            if (u != v && A[v - 1][u - 1] != 0) out.push_back(u);
        return out;
    };
    while (!left.empty()) {
        std::set<int> comp;
        std::vector<int> stack = {*left.begin()};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (!comp.insert(v).second) continue;
            for (int u : nbrs(v, left)) stack.push_back(u);
        }
        for (int v : comp) left.erase(v);

        const int n = static_cast<int>(comp.size());
        int bond = 1, bi = 0, bj = 0;
        for (int i : comp)
            for (int j : comp)
                if (i < j && A[i - 1][j - 1] * A[j - 1][i - 1] > 1) {
                    bond = A[i - 1][j - 1] * A[j - 1][i - 1];
                    bi = i;
                    bj = j;
                }
        std::string name;
        if (bond == 3) {
            name = "G2";
        } else if (bond == 2) {
            std::size_t di = nbrs(bi, comp).size(), dj = nbrs(bj, comp).size();
            if (n == 2) {
                name = "B2";
            } else if (n == 4 && di == 2 && dj == 2) {
                name = "F4";
            } else {
                int end = di == 1 ? bi : bj, other = end == bi ? bj : bi;
                bool short_end = rs.gram()[end - 1][end - 1] < rs.gram()[other - 1][other - 1];
                name = (short_end ? "B" : "C") + std::to_string(n);
            }
        } else {
            int branch = 0;
            for (int v : comp)
                if (nbrs(v, comp).size() == 3) branch = v;
            if (!branch) {
                name = "A" + std::to_string(n);
            } else {
                std::vector<int> arms;
                for (int start : nbrs(branch, comp)) {
                    int len = 0, prev = branch, cur = start;
                    while (true) {
                        ++len;
                        int next = 0;
                        for (int u : nbrs(cur, comp))
                            if (u != prev) next = u;
                        if (!next) break;
                        prev = cur;
                        cur = next;
                    }
                    arms.push_back(len);
                }
                std::sort(arms.begin(), arms.end());
                if (arms[0] == 1 && arms[1] == 1) name = "D" + std::to_string(n);
                else name = "E" + std::to_string(n);
            }
        }
        names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    std::string s;
    for (const auto& nm : names) s += (s.empty() ? "" : "x") + nm;
    return s;
}

Classification classify_four_summands(int max_classical_rank)
{
    if (max_classical_rank < 4) throw std::invalid_argument("max_classical_rank must be at least 4");
    std::vector<LieFamily> fams;
    for (int r = 1; r <= max_classical_rank; ++r) fams.emplace_back(Family::A, r);
    for (int r = 2; r <= max_classical_rank; ++r) fams.emplace_back(Family::B, r);
    for (int r = 2; r <= max_classical_rank; ++r) fams.emplace_back(Family::C, r);
    for (int r = 3; r <= max_classical_rank; ++r) fams.emplace_back(Family::D, r);
    for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2}) fams.emplace_back(f);

    Classification out;
    for (const LieFamily& lf : fams) {
        auto rs = std::make_shared<const RootSystem>(lf);
        const int n = rs->rank();
        std::vector<std::vector<int>> paintings;
        for (int i = 1; i <= n; ++i) paintings.push_back({i});
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) paintings.push_back({i, j});

        // Isomorphic white subdiagrams give the same space; applied to the exceptional
        // families, where the classical parametrizations do not apply.
        std::set<std::tuple<std::string, std::vector<int>>> seen;
        for (const auto& p : paintings) {
            PaintedDiagram pd(rs, p);
            Decomposition dec = decompose(pd);
            std::string wt = subdiagram_type(*rs, pd.white());
            if (dec.type == SpaceType::Other) {
                if (p.size() == 2) {
                    std::vector<int> hs = {rs->highest_root()[p[0] - 1], rs->highest_root()[p[1] - 1]};
                    std::sort(hs.begin(), hs.end());
                    if (hs == std::vector<int>{1, 2} && dec.size() == 5)
                        out.rejected.push_back({lf, p, dec.type, dec.dims(), wt, false, "five t-roots"});
                }
                continue;
            }
            if (lf.family == Family::D && n >= 4) {
                // {a_p, a_(l-1)} is the mirror image of {a_p, a_l}
                bool has_l1 = std::count(p.begin(), p.end(), n - 1), has_l = std::count(p.begin(), p.end(), n);
                if (has_l1 && !has_l) continue;
            }
            if (lf.exceptional() && !seen.insert({wt, {static_cast<int>(p.size())}}).second) continue;
            out.spaces.push_back({lf, p, dec.type, dec.dims(), wt, false, ""});
        }
    }
    out.degenerate.push_back({LieFamily(Family::D, 3), {1, 2}, SpaceType::TypeIIa, {2, 4, 4, 2}, "", true,
                              "SO(6) member of the SO(2l) {a1,a2} series; K is a maximal torus and the four "
                              "modules are reducible, so it is kept out of the four-summand list"});
    return out;
}

}  // namespace flagein
