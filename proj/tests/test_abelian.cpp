#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "coulomb/abelian.hpp"
#include "doctest.h"

using namespace coulomb;

namespace {

GaugeData a1() { return GaugeData::make(Quiver::make(1, {}), {1}, {1}, {0}); }

GaugeData a1v2() { return GaugeData::make(Quiver::make(1, {}), {2}, {2}, {0, 0}); }

GaugeData a2() { return GaugeData::make(Quiver::make(2, {{0, 1}}), {1, 1}, {0, 1}, {1}); }

GaugeData a2big() { return GaugeData::make(Quiver::make(2, {{0, 1}}), {2, 1}, {1, 1}, {0, 1}); }

GaugeData a3() {
    return GaugeData::make(Quiver::make(3, {{0, 1}, {1, 2}}), {1, 1, 1}, {0, 0, 1}, {2});
}

Coweight cw(const GaugeData& g, std::vector<std::vector<int>> rows) {
    Coweight lam = Coweight::zero(g);
    lam.lam = std::move(rows);
    return lam;
}

std::vector<std::tuple<int, int, int>> unit_steps(const Coweight& lam) {
    std::vector<std::tuple<int, int, int>> steps;
    for (std::size_t i = 0; i < lam.lam.size(); ++i)
        for (std::size_t r = 0; r < lam.lam[i].size(); ++r) {
            int x = lam.lam[i][r];
            for (int t = 0; t < std::abs(x); ++t)
                steps.emplace_back(x > 0 ? 1 : -1, static_cast<int>(i), static_cast<int>(r));
        }
    return steps;
}

}  // namespace

TEST_CASE("unit classes") {
    GaugeData g = a1();
    AbelianClass rp = r_unit(g, 1, 0, 0);
    CHECK(rp.realization == SmashElement::shift_u(g, 0, 0));
    CHECK(rp.lam.to_string() == "1");

    AbelianClass rm = r_unit(g, -1, 0, 0);
    SmashElement rm_expect =
        SmashElement::term(g, LocRat(poly_parse("w[1,1] - z[1] - 1/2*h")),
                           ExtAffineWeyl::translation(Coweight::unit(g, 0, 0, -1)));
    CHECK(rm.realization == rm_expect);

    GaugeData g2 = a2();
    SmashElement out_expect =
        SmashElement::term(g2, LocRat(poly_parse("w[1,1] - w[2,1] + 1/2*h")),
                           ExtAffineWeyl::translation(Coweight::unit(g2, 0, 0)));
    CHECK(r_unit(g2, 1, 0, 0).realization == out_expect);
    CHECK(r_unit(g2, 1, 1, 0).realization == SmashElement::shift_u(g2, 1, 0));
    SmashElement in_expect =
        SmashElement::term(g2, LocRat(poly_parse("(w[2,1] - z[1] - 1/2*h)*(w[2,1] - w[1,1] - 1/2*h)")),
                           ExtAffineWeyl::translation(Coweight::unit(g2, 1, 0, -1)));
    CHECK(r_unit(g2, -1, 1, 0).realization == in_expect);

    GaugeData gc = GaugeData::make(Quiver::make(1, {}), {1}, {0}, {}, {}, {2});
    SmashElement cof_expect =
        SmashElement::term(gc, LocRat(poly_parse("(w[1,1] + 1/2*h)^2")),
                           ExtAffineWeyl::translation(Coweight::unit(gc, 0, 0)));
    CHECK(r_unit(gc, 1, 0, 0).realization == cof_expect);

    CHECK_THROWS_AS(r_unit(g, 2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(r_unit(g, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("frozen composite classes") {
    GaugeData g = a1();
    Coweight two = cw(g, {{2}});
    SmashElement u = SmashElement::shift_u(g, 0, 0);
    CHECK(r_general(g, two).realization == u * u);
    CHECK(r_general(g, Coweight::zero(g)).realization == SmashElement::unit(g));

    SmashElement mtwo_expect = SmashElement::term(
        g, LocRat(poly_parse("(w[1,1] - z[1] - 1/2*h)*(w[1,1] - z[1] - 3/2*h)")),
        ExtAffineWeyl::translation(cw(g, {{-2}})));
    CHECK(r_general(g, cw(g, {{-2}})).realization == mtwo_expect);

    GaugeData g2 = a2();
    Coweight lam11 = cw(g2, {{1}, {1}});
    SmashElement expect11 = SmashElement::group(g2, ExtAffineWeyl::translation(lam11));
    expect11.mul_scalar(Scalar(-1));
    CHECK(r_general(g2, lam11).realization == expect11);

    SmashElement mirror_expect =
        SmashElement::term(g2, LocRat(poly_parse("w[2,1] - z[1] - 1/2*h")),
                           ExtAffineWeyl::translation(-lam11));
    CHECK(r_general(g2, -lam11).realization == mirror_expect);
}

TEST_CASE("step preconditions") {
    GaugeData g = a1();
    CHECK_THROWS_WITH(step_factor(g, 1, 0, 0, cw(g, {{-1}})), "formula not applicable");
    CHECK_THROWS_WITH(step_factor(g, -1, 0, 0, cw(g, {{1}})), "formula not applicable");
    CHECK_THROWS_WITH(r_general_ordered(g, {{1, 0, 0}, {-1, 0, 0}}), "formula not applicable");
}

TEST_CASE("frozen step factors") {
    GaugeData g2 = a2();
    CHECK(step_factor(g2, 1, 1, 0, cw(g2, {{1}, {0}})) == poly_parse("w[2,1] - w[1,1] + 1/2*h"));
    CHECK(step_factor(g2, 1, 0, 0, cw(g2, {{0}, {1}})) == poly_parse("w[2,1] - w[1,1] - 1/2*h"));
    CHECK(step_factor(g2, -1, 1, 0, cw(g2, {{-1}, {0}})) ==
          poly_parse("w[2,1] - w[1,1] - 1/2*h"));
    CHECK(step_factor(g2, -1, 0, 0, cw(g2, {{0}, {-1}})) ==
          poly_parse("w[2,1] - w[1,1] + 1/2*h"));
    CHECK(step_factor(g2, 1, 0, 0, cw(g2, {{0}, {0}})) == MultiPoly::constant(1));
}

TEST_CASE("path independence") {
    std::mt19937 rng(20240814);
    std::vector<GaugeData> gs = {a2big(), a3()};
    std::vector<std::vector<Coweight>> lams = {
        {cw(gs[0], {{2, -1}, {1}}), cw(gs[0], {{-1, -2}, {2}})},
        {cw(gs[1], {{1}, {1}, {1}}), cw(gs[1], {{1}, {-1}, {1}})}};
    for (std::size_t k = 0; k < gs.size(); ++k) {
        const GaugeData& g = gs[k];
        for (const Coweight& lam : lams[k]) {
            AbelianClass base = r_general(g, lam);
            CHECK(base.lam == lam);
            auto steps = unit_steps(lam);
            for (int trial = 0; trial < 10; ++trial) {
                std::shuffle(steps.begin(), steps.end(), rng);
                AbelianClass alt = r_general_ordered(g, steps);
                CHECK(alt.lam == lam);
                CHECK(alt.realization == base.realization);
            }
        }
    }
}

TEST_CASE("product formula") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (const GaugeData& g : {a2(), a2big()}) {
        for (int trial = 0; trial < 6; ++trial) {
            Coweight lam = Coweight::zero(g);
            for (auto& row : lam.lam)
                for (int& x : row) x = entry(rng);
            for (int i = 0; i < g.nvertices(); ++i)
                for (int r = 0; r < g.v[i]; ++r)
                    for (int sign : {1, -1}) {
                        if (sign * lam.at(i, r) < 0) continue;
                        ProductFormulaReport rep = verify_product_formula(g, sign, i, r, lam);
                        CHECK(rep.pass);
                    }
        }
    }
}

TEST_CASE("twist relation") {
    GaugeData g = a2big();
    Coweight lam = cw(g, {{1, -1}, {2}});
    SmashElement rl = r_general(g, lam).realization;
    MultiPoly x = poly_parse("w[1,1]^2 + w[1,2]*w[2,1] + z[1] + h*w[2,1]");
    SmashElement lhs = rl * SmashElement::poly(g, x);
    SmashElement rhs = SmashElement::poly(g, ExtAffineWeyl::translation(lam).act(x)) * rl;
    CHECK(lhs == rhs);
}

TEST_CASE("decompose frozen") {
    GaugeData g2 = a2();
    Coweight lam11 = cw(g2, {{1}, {1}});
    RTree tree = decompose_r(g2, lam11);
    CHECK(tree.to_string() == "(-1) * (r[+,1,1] * r[+,2,1]) + r[+,2,1] * r[+,1,1]");
    CHECK(h_one_eval(g2, tree) == h_one(r_general(g2, lam11)));

    HOneElement r1 = h_one(r_unit(g2, 1, 0, 0));
    HOneElement r2 = h_one(r_unit(g2, 1, 1, 0));
    HOneElement neg = r1 * r2;
    neg.scale(MultiPoly::constant(-1));
    CHECK(r2 * r1 + neg == h_one(r_general(g2, lam11)));

    HOneElement expect;
    expect.terms.emplace(lam11, MultiPoly::constant(-1));
    CHECK(h_one(r_general(g2, lam11)) == expect);

    RTree leaf = decompose_r(g2, cw(g2, {{0}, {-1}}));
    CHECK(leaf.to_string() == "r[-,2,1]");
    CHECK(decompose_r(g2, Coweight::zero(g2)).to_string() == "1");
}

TEST_CASE("decompose random") {
    std::vector<GaugeData> gs = {a1(), a1v2(), a2(), a2big(), a3()};
    std::vector<std::vector<Coweight>> lams = {
        {cw(gs[0], {{3}}), cw(gs[0], {{-2}})},
        {cw(gs[1], {{2, 1}}), cw(gs[1], {{1, -2}})},
        {cw(gs[2], {{1}, {1}}), cw(gs[2], {{2}, {1}}), cw(gs[2], {{-1}, {-1}}),
         cw(gs[2], {{1}, {-1}})},
        {cw(gs[3], {{1, 1}, {1}}), cw(gs[3], {{-1, 0}, {2}})},
        {cw(gs[4], {{1}, {1}, {1}}), cw(gs[4], {{-1}, {-1}, {-1}})}};
    for (std::size_t k = 0; k < gs.size(); ++k)
        for (const Coweight& lam : lams[k]) {
            RTree tree = decompose_r(gs[k], lam);
            CHECK(h_one_eval(gs[k], tree) == h_one(r_general(gs[k], lam)));
        }
}

TEST_CASE("decompose degree bound") {
    GaugeData g = a3();
    Coweight lam = cw(g, {{1}, {1}, {1}});
    CHECK_THROWS_WITH(decompose_r(g, lam, 0), "increase degree bound");
    RTree tree = decompose_r(g, lam, 1);
    CHECK(h_one_eval(g, tree) == h_one(r_general(g, lam)));
}
