#include "flagein/report.hpp"

#include "flagein/isometry.hpp"
#include "flagein/reference_data.hpp"
#include "flagein/structconst.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace flagein {

Json rational_json(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Json rationals_json(const RationalVector& v)
{
    Json a = Json::array();
    for (const auto& q : v) a.push_back(rational_json(q));
    return a;
}

Json triples_json(const TripleTable& t)
{
    Json o = Json::object();
    for (const auto& [k, v] : t.entries()) o[format_key(k)] = rational_json(v);
    return o;
}

namespace {

Json metric_json(const MetricParams& x)
{
    Json a = Json::array();
    for (double v : x) a.push_back(v);
    return a;
}

Json classified_json(const ClassifiedSpace& c)
{
    Json o;
    o["family"] = c.family.name();
    o["rank"] = c.family.rank;
    o["painted"] = c.painted;
    o["type"] = to_string(c.type);
    o["dims"] = c.dims;
    o["white_type"] = c.white_type;
    if (!c.note.empty()) o["note"] = c.note;
    return o;
}

struct ClosedFormCase {
    ClosedFormFamily family;
    int param;
    int gauge;  // index fixed to 1 in the reference form
    std::string name;
};

std::vector<ClosedFormCase> closed_form_cases(const SpaceSpec& s)
{
    const int l = s.family.rank;
    const auto& p = s.painted;
    std::vector<ClosedFormCase> out;
    if (p.size() != 2) return out;
    if (s.family.family == Family::B && p == std::vector<int>{1, 2}) out.push_back({ClosedFormFamily::SOOddIIa, l, 0, "x1=x4=1, x2=x3"});
    if (s.family.family == Family::D && p == std::vector<int>{1, 2}) out.push_back({ClosedFormFamily::SOEvenIIa, l, 0, "x1=x4=1, x2=x3"});
    if (s.family.family == Family::D && p[1] == l && 2 * p[0] == l && p[0] >= 2) {
        out.push_back({ClosedFormFamily::SO4pSym, p[0], 1, "x2=x4=1, x1=x3"});
        if (p[0] <= 6) out.push_back({ClosedFormFamily::SO4pSkew, p[0], 1, "x2=1, x1=x3"});
    }
    if (s.family.family == Family::C && p[1] == l && 2 * p[0] == l) out.push_back({ClosedFormFamily::Sp2p, p[0], 1, "x2=x4=1"});
    return out;
}

bool found_in(const std::vector<EinsteinSolution>& sols, const MetricParams& x, double tol)
{
    MetricParams y = normalize_first(x);
    return std::any_of(sols.begin(), sols.end(), [&](const EinsteinSolution& s) { return relative_distance(s.metric, y) <= tol; });
}

Json closed_forms_json(const SpaceSpec& spec, const SpaceModel& m, const std::vector<EinsteinSolution>& sols)
{
    Json arr = Json::array();
    for (const auto& c : closed_form_cases(spec)) {
        Json o;
        o["form"] = c.name;
        o["parameter"] = c.param;
        Json ms = Json::array();
        for (const auto& x : closed_forms(c.family, c.param)) {
            Json e;
            e["metric"] = metric_json(x);
            e["residual"] = residual_norm(m, x);
            e["found_by_solver"] = found_in(sols, x, 1e-8);
            ms.push_back(e);
        }
        o["metrics"] = ms;
        arr.push_back(o);
    }
    return arr;
}

Json quartic_json(const QuarticAnalysis& q)
{
    Json o;
    o["ell"] = q.ell;
    o["p"] = q.p;
    o["coefficients"] = rationals_json(q.coeffs);
    o["zeta"] = rational_json(q.zeta);
    o["F_at_half"] = rational_json(q.F_at_half);
    o["F_at_zeta"] = rational_json(q.F_at_zeta);
    o["F_at_right_end"] = rational_json(q.F_at_right);
    o["Q"] = rational_json(q.Q_value);
    if (q.F_at_half_ell) o["F_at_half_ell"] = rational_json(*q.F_at_half_ell);
    o["sign_condition"] = q.sign_condition;
    o["sturm_count"] = q.sturm_count;
    Json rs = Json::array();
    for (std::size_t i = 0; i < q.metrics.size(); ++i)
        rs.push_back({{"x1", q.roots_in_window[i]}, {"metric", metric_json(q.metrics[i])}, {"residual", q.residuals[i]}});
    o["roots"] = rs;
    return o;
}

Json isometry_json(const ScaleReport& rep)
{
    Json o;
    Json recs = Json::array();
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        const auto& r = rep.records[i];
        recs.push_back({{"index", i}, {"metric", metric_json(r.metric)}, {"kind", to_string(r.kind)}, {"S", r.S},
                        {"log_V", r.log_V}, {"H", r.H}});
    }
    o["records"] = recs;
    o["groups"] = rep.groups;
    Json pairs = Json::array();
    for (const auto& p : rep.pairs) pairs.push_back({{"a", p.a}, {"b", p.b}, {"verdict", p.label}});
    o["pairs"] = pairs;
    return o;
}

std::optional<std::pair<int, int>> quartic_params(const SpaceSpec& s)
{
    const int l = s.family.rank;
    if (s.family.family != Family::D || s.painted.size() != 2 || s.painted[1] != l) return std::nullopt;
    const int p = s.painted[0];
    if (l < 4 || p < 2 || p > l - 2 || l == 2 * p) return std::nullopt;
    return std::make_pair(l, p);
}

}  // namespace

Json classification_report(int max_rank)
{
    auto c = classify_four_summands(max_rank);
    Json o;
    o["max_rank"] = max_rank;
    for (const char* key : {"spaces", "degenerate", "rejected"}) o[key] = Json::array();
    for (const auto& s : c.spaces) o["spaces"].push_back(classified_json(s));
    for (const auto& s : c.degenerate) o["degenerate"].push_back(classified_json(s));
    for (const auto& s : c.rejected) o["rejected"].push_back(classified_json(s));
    return o;
}

Json solutions_json(const SpaceModel& m, const std::vector<EinsteinSolution>& sols)
{
    (void)m;
    Json a = Json::array();
    for (const auto& s : sols) {
        Json o;
        o["metric"] = metric_json(s.metric);
        o["einstein_constant"] = s.einstein_constant;
        o["residual"] = s.residual;
        o["kind"] = to_string(s.kind);
        if (s.kind == SolutionKind::KaehlerEinstein) o["ordering"] = s.ordering;
        a.push_back(o);
    }
    return a;
}

Json analyze_report(const SpaceSpec& spec, const SolverOptions& opt)
{
    SpaceModel m = build_model(spec);
    Json doc;
    Json sp;
    sp["alias"] = spec.alias;
    sp["label"] = spec.label;
    sp["family"] = spec.family.name();
    sp["rank"] = spec.family.rank;
    sp["painted"] = spec.painted;
    sp["type"] = to_string(m.type);
    if (spec.degenerate) sp["note"] = "instance of the SO(2l)/U(1)xU(1)xSO(2l-4) formulas at l = 3";
    doc["space"] = sp;

    if (m.decomposition) {
        const Decomposition& dec = *m.decomposition;
        const RootSystem& rs = dec.root_system();
        Json bl = Json::array();
        for (int v : spec.painted) bl.push_back(rs.bourbaki_label(v));
        doc["space"]["painted_bourbaki"] = bl;
        Json sums = Json::array();
        for (int k = 0; k < dec.size(); ++k) {
            const auto& s = dec.summands[k];
            sums.push_back({{"index", k + 1},
                            {"t_root", s.troot},
                            {"dim", s.dim},
                            {"complex_roots", s.members.size()},
                            {"lowest_weight", format_root(s.lowest_weight)},
                            {"highest_weight", format_root(s.highest_weight)}});
        }
        doc["decomposition"] = {{"dims", dec.dims()}, {"summands", sums}};
        Json ords = Json::array();
        for (const auto& o : enumerate_invariant_orderings(dec))
            ords.push_back({{"id", o.id}, {"signs", o.signs}, {"negation", o.negation}, {"natural", o.natural}});
        doc["orderings"] = ords;

        Json tr;
        tr["exact"] = triples_json(m.triples);
        TripleTable direct = triples_direct(dec);
        tr["direct"] = triples_json(direct);
        tr["methods_agree"] = direct == m.triples;
        if (dec.type == SpaceType::TypeI) {
            TwistorData tw = triples_twistor(dec);
            tr["twistor"] = {{"symmetric_space", tw.symmetric_space},
                             {"fiber", tw.fiber},
                             {"fiber_triple", rational_json(tw.fiber_triple_prime)},
                             {"killing_ratio", rational_json(tw.killing_ratio)},
                             {"c224", rational_json(tw.value())}};
        }
        doc["triples"] = tr;
    } else {
        doc["decomposition"] = {{"dims", m.dims}};
        doc["triples"] = {{"series_formula", triples_json(m.triples)}};
    }

    Json ke = Json::array();
    for (const auto& g : m.ke) {
        Json e = {{"ordering", g.ordering}, {"normalized", rationals_json(g.normalized)}, {"raw", rationals_json(g.values)}};
        if (m.decomposition) {
            auto ords = enumerate_invariant_orderings(*m.decomposition);
            e["koszul_weights"] = rationals_json(koszul_form(*m.decomposition, ords.at(g.ordering)).weight_coeffs);
        }
        ke.push_back(e);
    }
    doc["kaehler_einstein"] = ke;

    auto sols = solve_all(m, opt);
    doc["einstein"] = {{"starts", opt.starts}, {"seed", opt.seed}, {"count", sols.size()}, {"solutions", solutions_json(m, sols)}};

    Json cf = closed_forms_json(spec, m, sols);
    if (!cf.empty()) doc["closed_forms"] = cf;
    if (auto qp = quartic_params(spec)) doc["quartic"] = quartic_json(quartic_analysis(qp->first, qp->second));

    doc["isometry"] = isometry_json(isometry_report(m, sols));
    return doc;
}

// ---------------------------------------------------------------------------
// reproduction bundle

namespace {

using reference::Series;

struct Cache {
    const SolverOptions& opt;
    std::map<std::string, SpaceModel> models;
    std::map<std::string, std::vector<EinsteinSolution>> sols;

    const SpaceModel& model(const std::string& alias)
    {
        auto it = models.find(alias);
        if (it == models.end()) it = models.emplace(alias, build_model(parse_space(alias))).first;
        return it->second;
    }
    const std::vector<EinsteinSolution>& solutions(const std::string& alias)
    {
        auto it = sols.find(alias);
        if (it == sols.end()) it = sols.emplace(alias, solve_all(model(alias), opt)).first;
        return it->second;
    }
};

ReproductionFile finish(std::string name, std::string what, Json rows, Json notes = Json::array())
{
    bool pass = std::all_of(rows.begin(), rows.end(), [](const Json& r) { return r.at("pass").get<bool>(); });
    Json doc;
    doc["name"] = name;
    doc["description"] = what;
    doc["pass"] = pass;
    doc["rows"] = rows;
    if (!notes.empty()) doc["notes"] = notes;
    return {std::move(name), std::move(doc), pass};
}

double max_abs_diff(const MetricParams& a, const std::vector<double>& b)
{
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

// Closest solution in max-norm.
const EinsteinSolution* nearest(const std::vector<EinsteinSolution>& sols, const std::vector<double>& x)
{
    const EinsteinSolution* best = nullptr;
    double bd = 0;
    for (const auto& s : sols) {
        double d = max_abs_diff(s.metric, x);
        if (!best || d < bd) best = &s, bd = d;
    }
    return best;
}

std::vector<std::pair<int, int>> series_params(Series s, int lo, int hi)
{
    std::vector<std::pair<int, int>> out;
    for (int l = lo; l <= hi; ++l) {
        if (s == Series::SOOdd || s == Series::SOEven) {
            if (reference::series_valid(s, l, 0)) out.push_back({l, 0});
            continue;
        }
        for (int p = 1; p < l; ++p)
            if (reference::series_valid(s, l, p)) out.push_back({l, p});
    }
    return out;
}

const Series kSeries[] = {Series::SOOdd, Series::SOEven, Series::Sp, Series::SOEvenP};

ReproductionFile type1_dimensions(Cache& c)
{
    Json rows = Json::array();
    for (const auto& r : reference::type1()) {
        auto d = c.model(r.alias).dims;
        rows.push_back({{"space", r.alias}, {"computed", d}, {"expected", r.dims}, {"pass", d == r.dims}});
    }
    return finish("type1_dimensions", "real dimensions of the four summands, Type I", rows);
}

ReproductionFile type2_dimensions(Cache& c)
{
    Json rows = Json::array();
    for (Series s : kSeries)
        for (auto [l, p] : series_params(s, 4, 10)) {
            std::string a = reference::series_alias(s, l, p);
            auto d = c.model(a).dims;
            auto e = reference::series_dims(s, l, p);
            rows.push_back({{"space", a}, {"series", reference::series_name(s)}, {"computed", d}, {"expected", e}, {"pass", d == e}});
        }
    for (const auto& r : reference::type2a_exceptional()) {
        auto d = c.model(r.alias).dims;
        rows.push_back({{"space", r.alias}, {"series", ""}, {"computed", d}, {"expected", r.dims}, {"pass", d == r.dims}});
    }
    return finish("type2_dimensions", "real dimensions of the four summands, Type II, l = 4..10", rows);
}

ReproductionFile type1_triples(Cache& c)
{
    Json rows = Json::array();
    for (const auto& r : reference::type1()) {
        const auto& m = c.model(r.alias);
        TripleTable expected(4);
        expected.set(0, 0, 1, r.c112);
        expected.set(0, 1, 2, r.c123);
        expected.set(0, 2, 3, r.c134);
        expected.set(1, 1, 3, r.c224);
        TripleTable direct = triples_direct(*m.decomposition);
        rows.push_back({{"space", r.alias},
                        {"exact", triples_json(m.triples)},
                        {"direct", triples_json(direct)},
                        {"expected", triples_json(expected)},
                        {"pass", m.triples == expected && direct == expected}});
    }
    return finish("type1_triples", "[112], [123], [134], [224] for Type I, both methods", rows);
}

ReproductionFile type2_triples(Cache& c)
{
    Json rows = Json::array();
    auto row = [&](const std::string& a, const std::string& series, const TripleTable& expected) {
        const auto& m = c.model(a);
        TripleTable direct = triples_direct(*m.decomposition);
        rows.push_back({{"space", a},
                        {"series", series},
                        {"exact", triples_json(m.triples)},
                        {"direct", triples_json(direct)},
                        {"expected", triples_json(expected)},
                        {"pass", m.triples == expected && direct == expected}});
    };
    for (Series s : kSeries)
        for (auto [l, p] : series_params(s, 3, 10)) {
            auto [t1, t2] = reference::series_triples(s, l, p);
            TripleTable e(4);
            e.set(0, 1, 2, t1);
            if (s == Series::SOOdd || s == Series::SOEven) e.set(1, 2, 3, t2);
            else e.set(0, 2, 3, t2);
            row(reference::series_alias(s, l, p), reference::series_name(s), e);
        }
    for (const auto& r : reference::type2a_exceptional()) {
        TripleTable e(4);
        e.set(0, 1, 2, r.c123);
        e.set(1, 2, 3, r.c234);
        row(r.alias, "", e);
    }
    return finish("type2_triples", "nonzero triples for Type II, l = 3..10, both methods", rows);
}

ReproductionFile kahler_einstein(Cache& c)
{
    Json rows = Json::array();
    auto row = [&](const std::string& a, const RationalVector& expected) {
        const auto& m = c.model(a);
        auto ke = ke_metrics(*m.decomposition, expected.front());
        rows.push_back({{"space", a},
                        {"computed", rationals_json(ke.front().normalized)},
                        {"expected", rationals_json(expected)},
                        {"pass", ke.front().normalized == expected}});
    };
    for (const auto& r : reference::type1()) row(r.alias, {1, 2, 3, 4});
    for (Series s : kSeries)
        for (auto [l, p] : series_params(s, 3, 8)) row(reference::series_alias(s, l, p), reference::series_ke(s, l, p));
    for (const auto& r : reference::type2a_exceptional()) {
        RationalVector e;
        for (int v : r.ke) e.push_back(v);
        row(r.alias, e);
    }
    const auto& e6 = c.model("E6-IIa");
    auto ords = enumerate_invariant_orderings(*e6.decomposition);
    auto kf = koszul_form(*e6.decomposition, ords.front());
    rows.push_back({{"space", "E6-IIa koszul form"},
                    {"computed", rationals_json(kf.weight_coeffs)},
                    {"expected", rationals_json(reference::e6_koszul_weights())},
                    {"pass", kf.weight_coeffs == reference::e6_koszul_weights()}});
    return finish("kahler_einstein", "natural-ordering Kaehler-Einstein metrics, reference normalization", rows);
}

ReproductionFile einstein_type1(Cache& c)
{
    Json rows = Json::array();
    Json notes = Json::array();
    for (const auto& r : reference::type1()) {
        const auto& sols = c.solutions(r.alias);
        std::size_t want = r.einstein.size() + 1;
        rows.push_back({{"space", r.alias}, {"check", "count"}, {"computed", sols.size()}, {"expected", want}, {"pass", sols.size() == want}});
        for (const auto& x : r.einstein) {
            const auto* s = nearest(sols, x);
            double d = s ? max_abs_diff(s->metric, x) : INFINITY;
            rows.push_back({{"space", r.alias},
                            {"check", "metric"},
                            {"computed", s ? metric_json(s->metric) : Json()},
                            {"expected", x},
                            {"max_abs_diff", d},
                            {"pass", d <= 1e-3}});
            if (d > 1e-3 && s)
                notes.push_back(r.alias + ": printed metric has residual " + std::to_string(residual_norm(c.model(r.alias), x)) +
                                "; nearest solution differs by " + std::to_string(d));
        }
        bool ke = std::any_of(sols.begin(), sols.end(), [](const EinsteinSolution& s) { return s.kind == SolutionKind::KaehlerEinstein; });
        rows.push_back({{"space", r.alias}, {"check", "kaehler-einstein present"}, {"computed", ke}, {"expected", true}, {"pass", ke}});
    }
    return finish("einstein_type1", "invariant Einstein metrics on the Type I spaces, tolerance 1e-3", rows, notes);
}

ReproductionFile einstein_type2a_exceptional(Cache& c)
{
    Json rows = Json::array();
    const char* labels = "abcdefgh";
    for (const auto& r : reference::type2a_exceptional()) {
        const auto& sols = c.solutions(r.alias);
        rows.push_back({{"space", r.alias}, {"check", "count"}, {"computed", sols.size()}, {"expected", 8}, {"pass", sols.size() == 8}});
        for (std::size_t i = 0; i < r.einstein.size(); ++i) {
            const auto* s = nearest(sols, r.einstein[i]);
            double d = s ? max_abs_diff(s->metric, r.einstein[i]) : INFINITY;
            rows.push_back({{"space", r.alias},
                            {"check", std::string("metric (") + labels[i] + ")"},
                            {"computed", s ? metric_json(s->metric) : Json()},
                            {"expected", r.einstein[i]},
                            {"max_abs_diff", d},
                            {"pass", d <= 1e-4}});
        }
    }
    return finish("einstein_type2a_exceptional", "invariant Einstein metrics on E6 and E7 of Type IIa, tolerance 1e-4", rows);
}

Json closed_form_rows(Cache& c, const std::string& alias, ClosedFormFamily f, int param, Json& rows)
{
    const auto& m = c.model(alias);
    const auto& sols = c.solutions(alias);
    for (const auto& x : closed_forms(f, param)) {
        double res = residual_norm(m, x);
        bool found = found_in(sols, x, 1e-8);
        rows.push_back({{"space", alias},
                        {"check", "closed form"},
                        {"computed", metric_json(x)},
                        {"residual", res},
                        {"found_by_solver", found},
                        {"pass", res <= 1e-10 && found}});
    }
    return rows;
}

void count_row(Cache& c, const std::string& alias, std::size_t want, Json& rows)
{
    auto n = c.solutions(alias).size();
    rows.push_back({{"space", alias}, {"check", "count"}, {"computed", n}, {"expected", want}, {"pass", n == want}});
}

ReproductionFile einstein_so_odd(Cache& c)
{
    Json rows = Json::array();
    for (int l = 3; l <= 10; ++l) {
        std::string a = reference::series_alias(Series::SOOdd, l, 0);
        closed_form_rows(c, a, ClosedFormFamily::SOOddIIa, l, rows);
        count_row(c, a, 8, rows);
    }
    return finish("einstein_so_odd", "SO(2l+1)/U(1)xU(1)xSO(2l-3): closed forms and counts, l = 3..10", rows);
}

ReproductionFile einstein_so_even(Cache& c)
{
    Json rows = Json::array();
    Json notes = Json::array();
    for (int l = 3; l <= 10; ++l) {
        std::string a = reference::series_alias(Series::SOEven, l, 0);
        closed_form_rows(c, a, ClosedFormFamily::SOEvenIIa, l, rows);
        if (l >= 4) count_row(c, a, 8, rows);
    }
    notes.push_back("l = 3: both closed-form roots are the normal metric; the series formulas have " +
                    std::to_string(c.solutions("D:l=3-IIa").size()) + " solutions there, so counts start at l = 4");
    return finish("einstein_so_even", "SO(2l)/U(1)xU(1)xSO(2l-4): closed forms and counts, l = 3..10", rows, notes);
}

ReproductionFile einstein_so4p(Cache& c)
{
    Json rows = Json::array();
    for (int p = 2; p <= 6; ++p) {
        std::string a = reference::series_alias(Series::SOEvenP, 2 * p, p);
        closed_form_rows(c, a, ClosedFormFamily::SO4pSym, p, rows);
        closed_form_rows(c, a, ClosedFormFamily::SO4pSkew, p, rows);
        count_row(c, a, 8, rows);
    }
    return finish("einstein_so4p", "SO(4p)/U(p)xU(p): both closed-form pairs and counts, p = 2..6", rows);
}

ReproductionFile einstein_sp2p(Cache& c)
{
    Json rows = Json::array();
    for (int p = 1; p <= 6; ++p) {
        std::string a = reference::series_alias(Series::Sp, 2 * p, p);
        closed_form_rows(c, a, ClosedFormFamily::Sp2p, p, rows);
        count_row(c, a, 6, rows);
    }
    return finish("einstein_sp2p", "Sp(2p)/U(p)xU(p): closed forms and counts, p = 1..6", rows);
}

ReproductionFile einstein_so_quartic()
{
    Json rows = Json::array();
    for (int l = 5; l <= 12; ++l)
        for (int p = 2; p <= l - 2; ++p) {
            if (l == 2 * p) continue;
            auto q = quartic_analysis(l, p);
            Rational half_expected = -make_rational((p - 1) * (p - 1) * (p - 1), 2);
            Rational zeta_expected = Rational(l - 1) * q.Q_value / Rational(2 * (l - p - 1) * (l - p - 1));
            Rational q_expected((l - 1 - p) * (2 * p - 1) * (p - 1) - p * (3 * p - 1));
            double worst = 0;
            for (double r : q.residuals) worst = std::max(worst, r);
            bool roots_ok = !q.sign_condition || q.roots_in_window.size() >= 2;
            Json row = quartic_json(q);
            row["F_at_half_expected"] = rational_json(half_expected);
            row["F_at_zeta_expected"] = rational_json(zeta_expected);
            row["max_residual"] = worst;
            row["pass"] = q.F_at_half == half_expected && q.F_at_zeta == zeta_expected && q.Q_value == q_expected && roots_ok &&
                          worst <= 1e-10;
            rows.push_back(row);
        }
    return finish("einstein_so_quartic", "SO(2l)/U(p)xU(l-p): quartic in x1 for metrics (x1,1,x1,x4), l = 5..12", rows);
}

ReproductionFile scale_invariants(Cache& c)
{
    Json rows = Json::array();
    Json notes = Json::array();
    for (const auto& r : reference::type1()) {
        const auto& m = c.model(r.alias);
        const auto& sols = c.solutions(r.alias);
        std::vector<std::vector<double>> metrics = {{1, 2, 3, 4}};
        metrics.insert(metrics.end(), r.einstein.begin(), r.einstein.end());
        const int d = std::accumulate(m.dims.begin(), m.dims.end(), 0);
        const double c224 = m.triples.get(1, 1, 3).get_d();
        for (std::size_t i = 0; i < metrics.size(); ++i) {
            const auto* s = nearest(sols, metrics[i]);
            double h = scale_invariant(m, s->metric);
            // same with the 2/x4 part of the [224] term taken with the opposite sign
            double flipped = h + std::exp(log_volume(m, s->metric) / d) * c224 / s->metric[3];
            rows.push_back({{"space", r.alias},
                            {"metric", metric_json(s->metric)},
                            {"computed", h},
                            {"expected", r.scale_invariants[i]},
                            {"abs_diff", std::abs(h - r.scale_invariants[i])},
                            {"diagnostic_sign_flipped_224", flipped},
                            {"pass", std::abs(h - r.scale_invariants[i]) <= 1e-3}});
        }
    }
    notes.push_back("Type I: for Kaehler-Einstein metrics S_g = d e holds exactly for the computed values; the reference "
                    "numbers equal the computed ones plus V^(1/d) [224]/x4, reproduced in diagnostic_sign_flipped_224");
    const auto& e6 = c.model("E6-IIa");
    const auto& ref = reference::type2a_exceptional().front();
    const char* labels = "abcdefgh";
    for (std::size_t i = 0; i < ref.einstein.size(); ++i) {
        const auto* s = nearest(c.solutions("E6-IIa"), ref.einstein[i]);
        double h = scale_invariant(e6, s->metric);
        double e = reference::e6_scale_invariants()[i];
        rows.push_back({{"space", std::string("E6-IIa (") + labels[i] + ")"},
                        {"metric", metric_json(s->metric)},
                        {"computed", h},
                        {"expected", e},
                        {"abs_diff", std::abs(h - e)},
                        {"pass", std::abs(h - e) <= 1e-2}});
    }
    return finish("scale_invariants", "H = V^(1/d) S_g for the computed Einstein metrics", rows, notes);
}

ReproductionFile solution_counts(Cache& c)
{
    Json rows = Json::array();
    for (const auto& r : reference::solution_counts()) {
        auto n = c.solutions(r.alias).size();
        rows.push_back({{"space", r.label}, {"alias", r.alias}, {"computed", n}, {"expected", r.count}, {"pass", static_cast<int>(n) == r.count}});
    }
    return finish("solution_counts", "number of invariant Einstein metrics", rows);
}

std::set<std::tuple<std::string, std::vector<int>, std::string>> expected_four_summand(int max_rank)
{
    std::set<std::tuple<std::string, std::vector<int>, std::string>> e = {
        {"F4", {3}, "I"}, {"E7", {4}, "I"}, {"E8", {3}, "I"}, {"E8", {6}, "I"}, {"E6", {1, 2}, "IIa"}, {"E7", {1, 2}, "IIa"}};
    for (int l = 2; l <= max_rank; ++l) {
        e.insert({"B" + std::to_string(l), {1, 2}, "IIa"});
        for (int p = 1; p < l; ++p) e.insert({"C" + std::to_string(l), {p, l}, "IIb"});
        if (l >= 4) {
            e.insert({"D" + std::to_string(l), {1, 2}, "IIa"});
            for (int p = 2; p <= l - 2; ++p) e.insert({"D" + std::to_string(l), {p, l}, "IIb"});
        }
    }
    return e;
}

std::set<std::pair<std::string, std::vector<int>>> expected_five_summand(int max_rank)
{
    std::set<std::pair<std::string, std::vector<int>>> e = {{"E6", {1, 4}}, {"E6", {2, 5}}, {"E7", {1, 7}}};
    for (int l = 3; l <= max_rank; ++l)
        for (int p = 3; p <= l; ++p) e.insert({"B" + std::to_string(l), {1, p}});
    for (int l = 5; l <= max_rank; ++l)
        for (int p = 3; p <= l - 2; ++p) e.insert({"D" + std::to_string(l), {1, p}});
    return e;
}

ReproductionFile classification(int max_rank)
{
    auto c = classify_four_summands(max_rank);
    std::set<std::tuple<std::string, std::vector<int>, std::string>> got;
    for (const auto& s : c.spaces) got.insert({s.family.name(), s.painted, to_string(s.type)});
    std::set<std::pair<std::string, std::vector<int>>> rej;
    for (const auto& s : c.rejected) rej.insert({s.family.name(), s.painted});
    auto want = expected_four_summand(max_rank);
    auto want_rej = expected_five_summand(max_rank);
    Json rows = Json::array();
    for (const auto& [f, p, t] : want)
        rows.push_back({{"space", f}, {"painted", p}, {"type", t}, {"check", "listed"}, {"pass", got.count({f, p, t}) == 1}});
    for (const auto& [f, p, t] : got)
        if (!want.count({f, p, t}))
            rows.push_back({{"space", f}, {"painted", p}, {"type", t}, {"check", "unexpected entry"}, {"pass", false}});
    for (const auto& [f, p] : want_rej)
        rows.push_back({{"space", f}, {"painted", p}, {"type", "five t-roots"}, {"check", "rejected"}, {"pass", rej.count({f, p}) == 1}});
    return finish("classification", "four-summand flag manifolds up to rank " + std::to_string(max_rank), rows);
}

}  // namespace

std::vector<ReproductionFile> reproduce_all(const SolverOptions& opt)
{
    Cache c{opt, {}, {}};
    std::vector<ReproductionFile> out;
    out.push_back(classification(10));
    out.push_back(type1_dimensions(c));
    out.push_back(type2_dimensions(c));
    out.push_back(type1_triples(c));
    out.push_back(type2_triples(c));
    out.push_back(kahler_einstein(c));
    out.push_back(einstein_type1(c));
    out.push_back(einstein_type2a_exceptional(c));
    out.push_back(einstein_so_odd(c));
    out.push_back(einstein_so_even(c));
    out.push_back(einstein_so4p(c));
    out.push_back(einstein_sp2p(c));
    out.push_back(einstein_so_quartic());
    out.push_back(solution_counts(c));
    out.push_back(scale_invariants(c));
    return out;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string scalar_text(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool flat_array(const Json& v)
{
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive() || flat_array(e); });
}

void text(const Json& v, int indent, std::ostringstream& os)
{
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            const Json& e = it.value();
            if (e.is_primitive() || flat_array(e)) {
                os << pad << it.key() << ": " << scalar_text(e) << "\n";
            } else {
                os << pad << it.key() << ":\n";
                text(e, indent + 2, os);
            }
        }
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (e.is_object()) {
                std::ostringstream inner;
                text(e, indent + 2, inner);
                std::string s = inner.str();
                if (s.size() >= static_cast<std::size_t>(indent + 2)) s.replace(indent, 2, "- ");
                os << s;
            } else {
                os << pad << "- " << scalar_text(e) << "\n";
            }
        }
    } else {
        os << pad << scalar_text(v) << "\n";
    }
}

std::string csv_cell(const Json& v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

}  // namespace

std::string render_text(const Json& doc)
{
    std::ostringstream os;
    text(doc, 0, os);
    return os.str();
}

std::string render_csv(const Json& rows)
{
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (auto it = r.begin(); it != r.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    std::ostringstream os;
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(cols[i]);
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << (r.contains(cols[i]) ? csv_cell(r[cols[i]]) : "");
        os << "\n";
    }
    return os.str();
}

}  // namespace flagein
