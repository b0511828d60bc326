#include "flagein/einstein.hpp"

#include "flagein/poly.hpp"
#include "flagein/structconst.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace flagein {

SpaceModel model_from_decomposition(const Decomposition& dec, std::string name)
{
    if (dec.size() != 4 || dec.type == SpaceType::Other)
        throw std::invalid_argument("model_from_decomposition: four-summand space required");
    SpaceModel m;
    m.name = name.empty() ? dec.root_system().family().name() : std::move(name);
    m.type = dec.type;
    m.dims = dec.dims();
    m.triples = triples_exact(dec);
    m.ke = ke_metrics(dec);
    m.decomposition = dec;
    return m;
}

std::string to_string(SolutionKind k)
{
    switch (k) {
    case SolutionKind::KaehlerEinstein: return "kaehler-einstein";
    case SolutionKind::NonKaehler: return "non-kaehler";
    case SolutionKind::Normal: return "normal";
    }
    return "?";
}

std::vector<double> ricci_components(const SpaceModel& m, const MetricParams& x)
{
    if (m.type == SpaceType::Other) return ricci_generic<double>(m.dims, m.triples, x);
    return ricci_specialized<double>(m.type, m.dims, m.triples, x);
}

std::vector<double> einstein_residual(const SpaceModel& m, const MetricParams& x)
{
    auto r = ricci_components(m, x);
    std::vector<double> g;
    for (std::size_t k = 0; k + 1 < r.size(); ++k) g.push_back(r[k] - r[k + 1]);
    return g;
}

MetricParams normalize_first(const MetricParams& x)
{
    require_positive(x);
    MetricParams y = x;
    for (double& v : y) v /= x.front();
    return y;
}

MetricParams to_gauge(const MetricParams& x, int index)
{
    require_positive(x);
    MetricParams y = x;
    for (double& v : y) v /= x.at(index);
    return y;
}

double residual_norm(const SpaceModel& m, const MetricParams& x)
{
    double worst = 0;
    for (double g : einstein_residual(m, normalize_first(x))) worst = std::max(worst, std::abs(g));
    return worst;
}

double relative_distance(const MetricParams& a, const MetricParams& b)
{
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double s = std::max(std::abs(a[i]), std::abs(b[i]));
        if (s > 0) d = std::max(d, std::abs(a[i] - b[i]) / s);
    }
    return d;
}

namespace {

template <class T>
bool solve3(std::array<std::array<T, 3>, 3> a, std::array<T, 3>& b)
{
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
        if (a[piv][c] == 0) return false;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (int r = c + 1; r < 3; ++r) {
            T f = a[r][c] / a[c][c];
            for (int k = c; k < 3; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (int r = 2; r >= 0; --r) {
        for (int k = r + 1; k < 3; ++k) b[r] -= a[r][k] * b[k];
        b[r] /= a[r][r];
    }
    return true;
}

using std::abs;

template <class T>
void residual_and_jacobian(const RicciSystem& sys, const std::vector<T>& x, std::array<T, 3>& g,
                           std::array<std::array<T, 3>, 3>& j)
{
    std::vector<T> r;
    std::vector<std::vector<T>> jac;
    sys.eval(x, r, &jac);
    for (int k = 0; k < 3; ++k) {
        g[k] = r[k] - r[k + 1];
        for (int i = 0; i < 3; ++i) j[k][i] = jac[k][i + 1] - jac[k + 1][i + 1];
    }
}

double max_abs(const std::array<double, 3>& g)
{
    return std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2])});
}

// Damped Newton in z = log(x2, x3, x4).
std::optional<std::array<double, 3>> newton_from(const RicciSystem& sys, std::array<double, 3> z)
{
    const double zmax = std::log(1e4);
    std::vector<double> x(4, 1.0);
    std::array<double, 3> g;
    std::array<std::array<double, 3>, 3> j;
    auto load = [&](const std::array<double, 3>& zz) {
        for (int i = 0; i < 3; ++i) x[i + 1] = std::exp(zz[i]);
    };
    auto merit = [&](const std::array<double, 3>& zz) {
        load(zz);
        std::vector<double> r;
        sys.eval(x, r);
        double s = 0;
        for (int k = 0; k < 3; ++k) s += (r[k] - r[k + 1]) * (r[k] - r[k + 1]);
        return s;
    };
    for (int it = 0; it < 100; ++it) {
        load(z);
        residual_and_jacobian(sys, x, g, j);
        if (max_abs(g) < 1e-12) return z;
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i) j[k][i] *= x[i + 1];
        std::array<double, 3> step = g;
        if (!solve3(j, step)) return std::nullopt;
        double big = std::max({std::abs(step[0]), std::abs(step[1]), std::abs(step[2])});
        if (!std::isfinite(big)) return std::nullopt;
        if (big > 2) for (double& s : step) s *= 2 / big;
        double f0 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
        double t = 1;
        std::array<double, 3> trial;
        while (true) {
            for (int i = 0; i < 3; ++i) trial[i] = z[i] - t * step[i];
            if (merit(trial) <= (1 - 1e-4 * t) * f0 || t < 1.0 / 1024) break;
            t /= 2;
        }
        z = trial;
        for (double v : z)
            if (std::abs(v) > zmax) return std::nullopt;
    }
    load(z);
    residual_and_jacobian(sys, x, g, j);
    if (max_abs(g) < 1e-10) return z;
    return std::nullopt;
}

// Plain Newton in 50-digit arithmetic; tolerates singular roots by iterating longer.
std::optional<std::vector<HighPrecision>> polish(const RicciSystem& sys, const std::vector<double>& x0)
{
    std::vector<HighPrecision> x(x0.begin(), x0.end());
    std::array<HighPrecision, 3> g;
    std::array<std::array<HighPrecision, 3>, 3> j;
    const HighPrecision tiny("1e-46");
    for (int it = 0; it < 400; ++it) {
        residual_and_jacobian(sys, x, g, j);
        std::array<HighPrecision, 3> step = g;
        if (!solve3(j, step)) break;
        HighPrecision big = 0;
        for (int i = 0; i < 3; ++i) {
            x[i + 1] -= step[i];
            big = std::max(big, HighPrecision(abs(step[i]) / x[i + 1]));
            if (!(x[i + 1] > 0)) return std::nullopt;
        }
        if (big < tiny) break;
    }
    residual_and_jacobian(sys, x, g, j);
    for (const auto& v : g)
        if (abs(v) > HighPrecision("1e-28")) return std::nullopt;
    return x;
}

}  // namespace

EinsteinSolution classify_solution(const SpaceModel& m, const MetricParams& x, double ke_tol)
{
    EinsteinSolution s;
    s.metric = normalize_first(x);
    auto r = ricci_components(m, s.metric);
    double sum = 0;
    for (double v : r) sum += v;
    s.einstein_constant = sum / static_cast<double>(r.size());
    s.residual = residual_norm(m, s.metric);
    for (const auto& ke : m.ke) {
        MetricParams g;
        for (const auto& v : ke.normalized) g.push_back(Rational(v / ke.normalized.front()).get_d());
        if (relative_distance(g, s.metric) <= ke_tol) {
            s.kind = SolutionKind::KaehlerEinstein;
            s.ordering = ke.ordering;
            return s;
        }
    }
    bool normal = std::all_of(s.metric.begin(), s.metric.end(), [&](double v) { return std::abs(v - 1) <= ke_tol; });
    s.kind = normal ? SolutionKind::Normal : SolutionKind::NonKaehler;
    return s;
}

std::vector<EinsteinSolution> solve_all(const SpaceModel& m, const SolverOptions& opt)
{
    if (m.dims.size() != 4) throw std::invalid_argument("solve_all: four summands expected");
    if (opt.starts < 1000) throw std::invalid_argument("solve_all: at least 1000 starts");
    RicciSystem sys(m.dims, m.triples);

    std::mt19937_64 gen(opt.seed);
    std::uniform_real_distribution<double> u(std::log(opt.box_lo), std::log(opt.box_hi));
    std::vector<std::array<double, 3>> starts(opt.starts);
    for (auto& s : starts)
        for (double& v : s) v = u(gen);

    std::vector<std::optional<std::array<double, 3>>> found(starts.size());
    int nthreads = opt.threads > 0 ? opt.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nthreads = std::min<int>(nthreads, static_cast<int>(starts.size()));
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < starts.size(); i += nthreads) found[i] = newton_from(sys, starts[i]);
            });
    }

    // coarse clusters first, so that slow convergence near singular roots does not
    // multiply the number of high-precision polishes
    std::vector<MetricParams> reps;
    for (const auto& f : found) {
        if (!f) continue;
        MetricParams x = {1.0, std::exp((*f)[0]), std::exp((*f)[1]), std::exp((*f)[2])};
        bool dup = std::any_of(reps.begin(), reps.end(), [&](const MetricParams& r) { return relative_distance(r, x) <= 1e-4; });
        if (!dup) reps.push_back(x);
    }
    std::sort(reps.begin(), reps.end());

    std::vector<MetricParams> polished;
    for (const auto& x : reps) {
        auto hp = polish(sys, x);
        if (!hp) continue;
        MetricParams y;
        for (const auto& v : *hp) y.push_back(static_cast<double>(v));
        bool dup = std::any_of(polished.begin(), polished.end(),
                               [&](const MetricParams& r) { return relative_distance(r, y) <= opt.dedup_tol; });
        if (!dup) polished.push_back(y);
    }
    std::sort(polished.begin(), polished.end());

    std::vector<EinsteinSolution> out;
    for (const auto& y : polished) out.push_back(classify_solution(m, y, opt.ke_tol));
    return out;
}

std::vector<MetricParams> closed_forms(ClosedFormFamily f, int n)
{
    using HP = HighPrecision;
    auto to_d = [](const HP& v) { return static_cast<double>(v); };
    std::vector<MetricParams> out;
    switch (f) {
    case ClosedFormFamily::SOOddIIa: {
        if (n < 3) throw std::invalid_argument("closed form needs l >= 3");
        HP l = n, disc = 4 * l * l - 12 * l + 5;
        for (int s : {1, -1}) {
            HP v = (2 * l - 1 + s * sqrt(disc)) / 4;
            out.push_back({1.0, to_d(v), to_d(v), 1.0});
        }
        break;
    }
    case ClosedFormFamily::SOEvenIIa: {
        if (n < 3) throw std::invalid_argument("closed form needs l >= 3");
        HP l = n, disc = l * l - 4 * l + 3;
        for (int s : {1, -1}) {
            HP v = (l - 1 + s * sqrt(disc)) / 2;
            out.push_back({1.0, to_d(v), to_d(v), 1.0});
        }
        break;
    }
    case ClosedFormFamily::SO4pSym: {
        if (n < 2) throw std::invalid_argument("closed form needs p >= 2");
        HP p = n;
        for (int s : {1, -1}) {
            HP v = (2 * p - 1 + s * sqrt(2 * p - 1)) / (2 * (p - 1));
            out.push_back({to_d(v), 1.0, to_d(v), 1.0});
        }
        break;
    }
    case ClosedFormFamily::SO4pSkew: {
        if (n < 2 || n > 6) throw std::invalid_argument("closed form needs 2 <= p <= 6");
        HP p = n, disc = 2 * p * (-p * p * p + 7 * p * p - 5 * p + 1);
        if (disc < 0) throw std::invalid_argument("negative discriminant");
        for (int s : {1, -1}) {
            HP x4 = (7 * p * p * p - p * p - 3 * p + 1 + s * 2 * (2 * p - 1) * sqrt(disc)) /
                    ((p - 1) * (3 * p - 1) * (3 * p - 1));
            HP x1 = sqrt(p * x4 / (2 * (p - 1)));
            out.push_back({to_d(x1), 1.0, to_d(x1), to_d(x4)});
        }
        break;
    }
    case ClosedFormFamily::Sp2p: {
        if (n < 1) throw std::invalid_argument("closed form needs p >= 1");
        HP p = n;
        HP a = sqrt((p + 1) * (p + 1) * (p + 1) * (6 * p * p + 5 * p + 1));
        HP b = 6 * p * p * p + 11 * p * p + 6 * p + 1, den = 2 * (p + 1) * (p + 1) * (3 * p + 1);
        for (int s : {1, -1}) out.push_back({to_d((b + s * a) / den), 1.0, to_d((b - s * a) / den), 1.0});
        break;
    }
    }
    return out;
}

QuarticAnalysis quartic_analysis(int ell, int p)
{
    if (ell < 4 || p < 2 || p > ell - 2) throw std::invalid_argument("quartic_analysis: need l >= 4, 2 <= p <= l-2");
    if (ell == 2 * p) throw std::invalid_argument("quartic_analysis: l = 2p is covered by the closed forms");
    const long l = ell, q = p;
    QuarticAnalysis qa;
    qa.ell = ell;
    qa.p = p;
    qa.coeffs = {
        Rational((1 - l) * l * (l + q - 1)),
        Rational(4 * (l - 1) * (2 * l * l - 2 * l - q * q + q)),
        Rational(-2 * (12 * l * l * l - 11 * q * l * l - 25 * l * l - 2 * q * q * l + 20 * q * l + 14 * l + 2 * q * q * q -
                       2 * q * q - 6 * q - 2)),
        Rational(8 * (l - 1) * (4 * l - 3 * q - 1) * (l - q - 1)),
        Rational(-8 * (l - q - 1) * (l - q - 1) * (2 * l - q - 1)),
    };
    Polynomial F(qa.coeffs);
    Rational half = make_rational(1, 2), right = make_rational(l + q - 1, 2 * (l - q - 1));
    qa.zeta = (half + right) / 2;
    qa.F_at_half = F(half);
    qa.F_at_zeta = F(qa.zeta);
    qa.F_at_right = F(right);
    qa.Q_value = Rational(-2 * q * q * q + 2 * l * q * q - 2 * q * q - 3 * l * q + 3 * q + l - 1);
    if (p == ell - 2) qa.F_at_half_ell = F(make_rational(l, 2));
    qa.sign_condition = qa.F_at_zeta > 0 || (qa.F_at_half_ell && *qa.F_at_half_ell > 0);
    qa.sturm_count = sturm_count(sturm_sequence(F), half, right);

    auto rs = std::make_shared<const RootSystem>(LieFamily(Family::D, ell));
    SpaceModel model = model_from_decomposition(decompose(PaintedDiagram(rs, {p, ell})));
    Rational width(1);
    mpz_class two_pow = 1;
    two_pow <<= 160;
    width /= two_pow;
    for (const auto& [lo, hi] : isolate_roots(F, half, right, width)) {
        HighPrecision x1 = from_rational<HighPrecision>((lo + hi) / 2);
        HighPrecision x4 = (2 * x1 - 1) * (l + q - 1 - 2 * (l - q - 1) * x1) / (q - 1);
        qa.roots_in_window.push_back(static_cast<double>(x1));
        MetricParams g = {static_cast<double>(x1), 1.0, static_cast<double>(x1), static_cast<double>(x4)};
        qa.metrics.push_back(g);
        qa.residuals.push_back(residual_norm(model, g));
    }
    return qa;
}

}  // namespace flagein
