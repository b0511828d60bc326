#include "flagein/reference_data.hpp"

#include <stdexcept>

namespace flagein::reference {

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

const std::vector<TypeIRow>& type1()
{
    static const std::vector<TypeIRow> rows = {
        {"F4-I", {12, 18, 4, 6}, q(2), q(1), q(2, 3), q(2),
         {{1, 1.2761, 1.9578, 2.3178}, {1, 0.9704, 0.2291, 1.0097}}, {15.5381, 15.7376, 15.7255}},
        {"E7-I", {48, 36, 16, 6}, q(8), q(4), q(4, 3), q(2),
         {{1, 0.8233, 1.2942, 1.3449}, {1, 0.9912, 0.5783, 1.1312}}, {38.8641, 39.0998, 38.9954}},
        {"E8(i)-I", {96, 60, 32, 6}, q(16), q(8), q(8, 5), q(2),
         {{1, 0.6496, 1.1094, 1.0610}, {1, 1.1560, 1.0178, 0.2146}, {1, 1.0970, 0.7703, 1.2969},
          {1, 0.7633, 1.0090, 0.1910}},
         {70.9532, 70.6326, 77.6071, 70.6696, 77.3436}},
        {"E8(ii)-I", {84, 70, 28, 14}, q(14), q(7), q(14, 5), q(14, 3),
         {{1, 0.9133, 1.4136, 1.5196}, {1, 0.9663, 0.4898, 1.0809}}, {72.1927, 72.8754, 72.6779}},
    };
    return rows;
}

const std::vector<TypeIIaExceptionalRow>& type2a_exceptional()
{
    static const std::vector<TypeIIaExceptionalRow> rows = {
        {"E6-IIa", {2, 20, 20, 10}, q(5, 6), q(5, 2), {1, 4, 5, 9},
         {{1, 0.568845, 0.568845, 0.452648},
          {1, 3.81171, 3.81171, 7.45484},
          {1, 4.93397, 4.93397, 3.34633},
          {1, 0.685474, 0.685474, 1.19063},
          {1, 0.636364, 0.363636, 0.272727},
          {1, 0.363636, 0.636364, 0.272727},
          {1, 4, 5, 9},
          {1, 5, 4, 9}}},
        {"E7-IIa", {2, 32, 32, 20}, q(8, 9), q(40, 9), {1, 6, 7, 13},
         {{1, 7.46064, 7.46064, 5.7877},
          {1, 5.79359, 5.79359, 11.4613},
          {1, 0.704472, 0.704472, 1.27517},
          {1, 0.579765, 0.579765, 0.505408},
          {1, 0.352941, 0.647059, 0.294118},
          {1, 0.647059, 0.352941, 0.294118},
          {1, 6, 7, 13},
          {1, 7, 6, 13}}},
    };
    return rows;
}

const std::vector<double>& e6_scale_invariants()
{
    static const std::vector<double> h = {21.0363, 20.9202, 20.5771, 21.1831, 21.146, 21.146, 20.9279, 20.9279};
    return h;
}

std::string series_name(Series s)
{
    switch (s) {
    case Series::SOOdd: return "SO(2l+1)/U(1)xU(1)xSO(2l-3)";
    case Series::SOEven: return "SO(2l)/U(1)xU(1)xSO(2l-4)";
    case Series::Sp: return "Sp(l)/U(p)xU(l-p)";
    case Series::SOEvenP: return "SO(2l)/U(p)xU(l-p)";
    }
    return "?";
}

bool series_valid(Series s, int l, int p)
{
    switch (s) {
    case Series::SOOdd: return l >= 2;
    case Series::SOEven: return l >= 4;
    case Series::Sp: return l >= 2 && p >= 1 && p <= l - 1;
    case Series::SOEvenP: return l >= 4 && p >= 2 && p <= l - 2;
    }
    return false;
}

std::string series_alias(Series s, int l, int p)
{
    const std::string L = std::to_string(l), P = std::to_string(p);
    switch (s) {
    case Series::SOOdd: return "B:l=" + L + "-IIa";
    case Series::SOEven: return "D:l=" + L + "-IIa";
    case Series::Sp: return "C:l=" + L + ",p=" + P + "-IIb";
    case Series::SOEvenP: return "D:l=" + L + ",p=" + P + "-IIb";
    }
    return "";
}

std::vector<int> series_dims(Series s, int l, int p)
{
    if (!series_valid(s, l, p)) throw std::invalid_argument("series parameters out of range");
    switch (s) {
    case Series::SOOdd: return {2, 2 * (2 * l - 3), 2 * (2 * l - 3), 2};
    case Series::SOEven: return {2, 4 * (l - 2), 4 * (l - 2), 2};
    case Series::Sp: return {2 * p * (l - p), (l - p) * (l - p + 1), 2 * p * (l - p), p * (p + 1)};
    case Series::SOEvenP: return {2 * p * (l - p), (l - p) * (l - p - 1), 2 * p * (l - p), p * (p - 1)};
    }
    return {};
}

std::pair<Rational, Rational> series_triples(Series s, int l, int p)
{
    if (!series_valid(s, l, p)) throw std::invalid_argument("series parameters out of range");
    switch (s) {
    case Series::SOOdd: return {q(2 * l - 3, 2 * l - 1), q(2 * l - 3, 2 * l - 1)};
    case Series::SOEven: return {q(l - 2, l - 1), q(l - 2, l - 1)};
    case Series::Sp:
        return {q(p * (l - p) * (l - p + 1), 2 * (l + 1)), q(p * (p + 1) * (l - p), 2 * (l + 1))};
    case Series::SOEvenP:
        return {q(p * (l - p) * (l - p - 1), 2 * (l - 1)), q(p * (p - 1) * (l - p), 2 * (l - 1))};
    }
    return {};
}

RationalVector series_ke(Series s, int l, int p)
{
    if (!series_valid(s, l, p)) throw std::invalid_argument("series parameters out of range");
    switch (s) {
    case Series::SOOdd: return {q(1), q(2 * l - 3, 2), q(2 * l - 1, 2), q(2 * l - 2)};
    case Series::SOEven: return {q(1), q(l - 2), q(l - 1), q(2 * l - 3)};
    case Series::Sp: return {q(l, 2), q(l - p + 1), q(3 * l - 2 * p + 2, 2), q(2 * l - p + 1)};
    case Series::SOEvenP: return {q(l, 2), q(l - p - 1), q(3 * l - 2 * p - 2, 2), q(2 * l - p - 1)};
    }
    return {};
}

RationalVector e6_koszul_weights() { return {q(1), q(4), q(0), q(0), q(0), q(0)}; }

std::vector<CountRow> solution_counts()
{
    std::vector<CountRow> rows = {
        {"F4/SU(3)xSU(2)xU(1)", "F4-I", 3},
        {"E7/SU(4)xSU(3)xSU(2)xU(1)", "E7-I", 3},
        {"E8/SU(7)xSU(2)xU(1)", "E8(ii)-I", 3},
        {"E8/SO(10)xSU(3)xU(1)", "E8(i)-I", 5},
        {"E6/SU(5)xU(1)xU(1)", "E6-IIa", 8},
        {"E7/SO(10)xU(1)xU(1)", "E7-IIa", 8},
    };
    for (int l = 3; l <= 6; ++l)
        rows.push_back({"SO(" + std::to_string(2 * l + 1) + ")/U(1)xU(1)xSO(" + std::to_string(2 * l - 3) + ")",
                        series_alias(Series::SOOdd, l, 0), 8});
    for (int l = 4; l <= 6; ++l)
        rows.push_back({"SO(" + std::to_string(2 * l) + ")/U(1)xU(1)xSO(" + std::to_string(2 * l - 4) + ")",
                        series_alias(Series::SOEven, l, 0), 8});
    for (int p = 2; p <= 6; ++p)
        rows.push_back({"SO(" + std::to_string(4 * p) + ")/U(" + std::to_string(p) + ")xU(" + std::to_string(p) + ")",
                        series_alias(Series::SOEvenP, 2 * p, p), 8});
    for (int p = 1; p <= 6; ++p)
        rows.push_back({"Sp(" + std::to_string(2 * p) + ")/U(" + std::to_string(p) + ")xU(" + std::to_string(p) + ")",
                        series_alias(Series::Sp, 2 * p, p), 6});
    return rows;
}

}  // namespace flagein::reference
