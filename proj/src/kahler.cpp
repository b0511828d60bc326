#include "flagein/kahler.hpp"

#include <stdexcept>

namespace flagein {

namespace {

void check_ordering(const Decomposition& dec, const InvariantOrdering& ord)
{
    if (static_cast<int>(ord.signs.size()) != dec.size())
        throw std::invalid_argument("ordering does not match the decomposition");
    for (int s : ord.signs)
        if (s != 1 && s != -1) throw std::invalid_argument("ordering signs must be +1 or -1");
}

}  // namespace

std::vector<Root> positive_complementary(const Decomposition& dec, const InvariantOrdering& ord)
{
    check_ordering(dec, ord);
    std::vector<Root> out;
    for (int k = 0; k < dec.size(); ++k)
        for (const Root& a : dec.summands[k].members) out.push_back(ord.signs[k] > 0 ? a : -a);
    return out;
}

KoszulForm koszul_form(const Decomposition& dec, const InvariantOrdering& ord)
{
    const RootSystem& rs = dec.root_system();
    KoszulForm kf;
    kf.root_coeffs.assign(rs.rank(), Rational(0));
    for (const Root& a : positive_complementary(dec, ord))
        for (int i = 0; i < rs.rank(); ++i) kf.root_coeffs[i] += a[i];
    kf.weight_coeffs = rs.to_weight(kf.root_coeffs);
    for (auto& c : kf.weight_coeffs) c /= 2;
    for (int w : dec.diagram.white())
        if (kf.weight_coeffs[w - 1] != 0) throw std::logic_error("Koszul form has a white component");
    return kf;
}

KEMetric ke_metric(const Decomposition& dec, const InvariantOrdering& ord, const Rational& leading)
{
    const RootSystem& rs = dec.root_system();
    KoszulForm kf = koszul_form(dec, ord);
    KEMetric g;
    g.ordering = ord.id;
    for (int k = 0; k < dec.size(); ++k) {
        Root low = lowest_weight(dec, k, ord.signs[k]);
        RationalVector lv(low.begin(), low.end());
        Rational v = rs.inner_product_weight(kf.weight_coeffs, lv) / 2;
        // every member pairs to the same value; orientation is carried by the ordering
        for (const Root& m : dec.summands[k].members) {
            RationalVector mv(m.begin(), m.end());
            if (rs.inner_product_weight(kf.weight_coeffs, mv) / 2 * ord.signs[k] != v)
                throw std::logic_error("Koszul pairing differs inside a summand");
        }
        if (v <= 0) throw std::logic_error("Kaehler-Einstein component is not positive");
        g.values.push_back(v);
    }
    for (const auto& v : g.values) g.normalized.push_back(v / g.values[0] * leading);
    return g;
}

std::vector<KEMetric> ke_metrics(const Decomposition& dec, const Rational& leading)
{
    auto ords = enumerate_invariant_orderings(dec);
    std::vector<KEMetric> out;
    for (std::size_t i = 0; i < ords.size() / 2; ++i) out.push_back(ke_metric(dec, ords[i], leading));
    return out;
}

}  // namespace flagein
