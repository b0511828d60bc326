#include "flagein/isometry.hpp"

#include <cmath>
#include <numeric>

namespace flagein {

double scalar_curvature(const SpaceModel& m, const MetricParams& x)
{
    auto r = ricci_components(m, x);
    double s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) s += m.dims[i] * r[i];
    return s;
}

double scalar_curvature_explicit(const SpaceModel& m, const MetricParams& x)
{
    require_positive(x);
    const int n = static_cast<int>(x.size());
    double a = 0, b = 0;
    for (int i = 0; i < n; ++i) a += m.dims[i] / x[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rational c = m.triples.get(i, j, k);
                if (c != 0) b += c.get_d() * x[k] / (x[i] * x[j]);
            }
    return a / 2 - b / 4;
}

double log_volume(const SpaceModel& m, const MetricParams& x)
{
    require_positive(x);
    double v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) v += m.dims[i] * std::log(x[i]);
    return v;
}

double scale_invariant(const SpaceModel& m, const MetricParams& x)
{
    const int d = std::accumulate(m.dims.begin(), m.dims.end(), 0);
    return std::exp(log_volume(m, x) / d) * scalar_curvature(m, x);
}

ScaleReport isometry_report(const SpaceModel& m, const std::vector<EinsteinSolution>& sols, double rel_tol)
{
    ScaleReport rep;
    for (const auto& s : sols) {
        ScaleRecord r;
        r.metric = s.metric;
        r.kind = s.kind;
        r.ordering = s.ordering;
        r.S = scalar_curvature(m, s.metric);
        r.log_V = log_volume(m, s.metric);
        r.H = scale_invariant(m, s.metric);
        rep.records.push_back(r);
    }
    const int n = static_cast<int>(rep.records.size());
    auto close = [&](int i, int j) {
        double hi = rep.records[i].H, hj = rep.records[j].H;
        return std::abs(hi - hj) <= rel_tol * std::max({std::abs(hi), std::abs(hj), 1.0});
    };
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (close(i, j)) parent[find(j)] = find(i);
    std::vector<int> slot(n, -1);
    for (int i = 0; i < n; ++i) {
        int root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(rep.groups.size());
            rep.groups.emplace_back();
        }
        rep.groups[slot[root]].push_back(i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            rep.pairs.push_back({i, j, find(i) == find(j) ? "indistinguishable by H" : "non-isometric"});
    return rep;
}

}  // namespace flagein
