#include "doctest.h"

#include "flagein/rootsys.hpp"

#include <array>
#include <cmath>
#include <set>

using namespace flagein;

TEST_CASE("root counts and highest root heights")
{
    struct Row { Family f; int r; std::size_t roots; int coxeter; };
    const Row rows[] = {{Family::A, 4, 20, 5}, {Family::B, 5, 50, 10}, {Family::C, 6, 72, 12}, {Family::D, 7, 84, 12},
                        {Family::E6, 0, 72, 12}, {Family::E7, 0, 126, 18}, {Family::E8, 0, 240, 30},
                        {Family::F4, 0, 48, 12}, {Family::G2, 0, 12, 6}};
    for (const auto& r : rows) {
        RootSystem rs(LieFamily(r.f, r.r));
        CAPTURE(rs.family().name());
        CHECK(rs.roots().size() == r.roots);
        CHECK(rs.positive_roots().size() == r.roots / 2);
        CHECK(height(rs.highest_root()) == r.coxeter - 1);
    }
}

TEST_CASE("highest roots in the diagram numbering")
{
    CHECK(RootSystem(LieFamily(Family::E6)).highest_root() == Root{1, 2, 3, 2, 1, 2});
    CHECK(RootSystem(LieFamily(Family::E7)).highest_root() == Root{1, 2, 3, 4, 3, 2, 2});
    CHECK(RootSystem(LieFamily(Family::E8)).highest_root() == Root{2, 3, 4, 5, 6, 4, 2, 3});
    CHECK(RootSystem(LieFamily(Family::F4)).highest_root() == Root{2, 3, 4, 2});
    CHECK(RootSystem(LieFamily(Family::B, 4)).highest_root() == Root{1, 2, 2, 2});
    CHECK(RootSystem(LieFamily(Family::C, 4)).highest_root() == Root{2, 2, 2, 1});
    CHECK(RootSystem(LieFamily(Family::D, 5)).highest_root() == Root{1, 2, 2, 1, 1});
}

TEST_CASE("invalid families")
{
    CHECK_THROWS_AS(LieFamily(Family::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(LieFamily(Family::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(LieFamily(Family::E6, 7), std::invalid_argument);
}

// A2 in the plane x+y+z = 0: alpha1 = e1-e2, alpha2 = e2-e3.
TEST_CASE("A2 root strings against explicit vectors")
{
    RootSystem rs(LieFamily(Family::A, 2));
    auto vec = [](const Root& r) { return std::array<int, 3>{r[0], r[1] - r[0], -r[1]}; };
    std::set<std::array<int, 3>> euclid;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) {
                std::array<int, 3> v{0, 0, 0};
                v[i] = 1;
                v[j] = -1;
                euclid.insert(v);
            }
    auto is_root = [&](std::array<int, 3> v) { return euclid.count(v) > 0; };
    for (const auto& a : rs.roots())
        for (const auto& b : rs.roots()) {
            if (a == b || a == -b) continue;
            int p = 0, q = 0;
            auto va = vec(a), vb = vec(b);
            while (true) {
                std::array<int, 3> w;
                for (int k = 0; k < 3; ++k) w[k] = vb[k] - (p + 1) * va[k];
                if (!is_root(w)) break;
                ++p;
            }
            while (true) {
                std::array<int, 3> w;
                for (int k = 0; k < 3; ++k) w[k] = vb[k] + (q + 1) * va[k];
                if (!is_root(w)) break;
                ++q;
            }
            CHECK(rs.root_string(a, b) == std::make_pair(p, q));
        }
}

// F4 in R^4: long roots +-e_i +- e_j, short roots +-e_i and (+-1,+-1,+-1,+-1)/2.
// Simple roots e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2.
TEST_CASE("F4 against its Euclidean realization")
{
    RootSystem rs(LieFamily(Family::F4));
    const double simple[4][4] = {{0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}, {0.5, -0.5, -0.5, -0.5}};
    std::set<std::array<int, 4>> euclid;  // doubled coordinates
    for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) {
            std::array<int, 4> v{0, 0, 0, 0};
            v[i] = 2 * s;
            euclid.insert(v);
            for (int j = i + 1; j < 4; ++j)
                for (int t : {1, -1}) {
                    auto w = v;
                    w[j] = 2 * t;
                    euclid.insert(w);
                }
        }
    for (int m = 0; m < 16; ++m)
        euclid.insert({m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1, m & 8 ? 1 : -1});
    REQUIRE(euclid.size() == 48);

    auto embed = [&](const Root& r) {
        std::array<int, 4> v{0, 0, 0, 0};
        for (int k = 0; k < 4; ++k) {
            double s = 0;
            for (int i = 0; i < 4; ++i) s += r[i] * simple[i][k];
            v[k] = static_cast<int>(std::lround(2 * s));
        }
        return v;
    };
    std::set<std::array<int, 4>> mapped;
    for (const auto& r : rs.roots()) mapped.insert(embed(r));
    CHECK(mapped == euclid);

    // long roots have squared length 2 in both pictures
    for (const auto& a : rs.roots())
        for (const auto& b : rs.roots()) {
            auto va = embed(a), vb = embed(b);
            int dot = 0;
            for (int k = 0; k < 4; ++k) dot += va[k] * vb[k];
            CHECK(rs.inner_product(a, b) == make_rational(dot, 4));
        }
}

TEST_CASE("weights and root coordinates")
{
    RootSystem rs(LieFamily(Family::E6));
    RationalVector a3 = {0, 0, 1, 0, 0, 0};
    auto w = rs.to_weight(a3);
    CHECK(rs.to_root_coords(w) == a3);
    // (Lambda_i, alpha_j) = delta_ij for simply-laced long-root-2 normalization
    Weight l1 = {1, 0, 0, 0, 0, 0};
    CHECK(rs.inner_product_weight(l1, {1, 0, 0, 0, 0, 0}) == 1);
    CHECK(rs.inner_product_weight(l1, {0, 1, 0, 0, 0, 0}) == 0);
}

TEST_CASE("Bourbaki labels")
{
    RootSystem e6(LieFamily(Family::E6));
    CHECK(e6.bourbaki_label(1) == 1);
    CHECK(e6.bourbaki_label(6) == 2);
    RootSystem e8(LieFamily(Family::E8));
    CHECK(e8.bourbaki_label(8) == 2);
    CHECK(e8.bourbaki_label(1) == 8);
    CHECK(format_root({1, 2, 0, 1}) == "a1+2a2+a4");
}
