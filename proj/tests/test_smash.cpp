#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "coulomb/smash.hpp"

using namespace coulomb;

namespace {

GaugeData a1_11() { return GaugeData::make(Quiver::make(1, {}), {1}, {1}, {0}); }
GaugeData a1_2() { return GaugeData::make(Quiver::make(1, {}), {2}, {0}, {}); }

MultiPoly w(int i, int r) { return MultiPoly::variable(VarId::gauge(i, r)); }
MultiPoly z(int k) { return MultiPoly::variable(VarId::flavour(k)); }
MultiPoly h() { return MultiPoly::variable(VarId::loop()); }

MultiPoly random_poly(const GaugeData& g, std::mt19937& rng) {
    std::vector<VarId> vars{VarId::loop()};
    for (int i = 0; i < g.nvertices(); ++i)
        for (int r = 0; r < g.v[i]; ++r) vars.push_back(VarId::gauge(i, r));
    for (int k = 0; k < g.nflavours(); ++k) vars.push_back(VarId::flavour(k));
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> var(0, vars.size() - 1);
    std::uniform_int_distribution<int> nterms(1, 2);
    MultiPoly p;
    for (int t = nterms(rng); t > 0; --t) {
        MultiPoly mono = MultiPoly::constant(coeff(rng));
        for (int f = 0; f < 2; ++f) mono *= MultiPoly::variable(vars[var(rng)]);
        p += mono;
    }
    return p;
}

SmashElement random_poly_shift_elem(const GaugeData& g, std::mt19937& rng) {
    std::uniform_int_distribution<int> shift(-1, 1);
    SmashElement out = SmashElement::zero(g);
    for (int t = 0; t < 2; ++t) {
        Coweight lam = Coweight::zero(g);
        for (auto& row : lam.lam)
            for (int& x : row) x = shift(rng);
        out += SmashElement::term(g, LocRat(random_poly(g, rng)),
                                  ExtAffineWeyl::translation(lam));
    }
    return out;
}

SmashElement random_elem(const GaugeData& g, std::mt19937& rng) {
    std::uniform_int_distribution<int> shift(-1, 1);
    std::uniform_int_distribution<int> flip(0, 1);
    SmashElement out = SmashElement::zero(g);
    for (int t = 0; t < 2; ++t) {
        ExtAffineWeyl e = ExtAffineWeyl::identity(g);
        for (int i = 0; i < g.nvertices(); ++i) {
            for (int r = 0; r < g.v[i]; ++r) e.shift[i][r] = shift(rng);
            if (g.v[i] == 2 && flip(rng)) std::swap(e.perm[i][0], e.perm[i][1]);
        }
        LocRat c(random_poly(g, rng));
        if (g.v[0] >= 2 && flip(rng))
            c = c.div_by_form(VarId::gauge(0, 0), VarId::gauge(0, 1), Scalar(flip(rng)));
        out += SmashElement::term(g, c, e);
    }
    return out;
}

}  // namespace

TEST_CASE("shift relation") {
    GaugeData g = a1_11();
    SmashElement u = SmashElement::shift_u(g, 0, 0);
    SmashElement we = SmashElement::poly(g, w(0, 0));
    SmashElement lhs = u * we;
    SmashElement rhs = SmashElement::term(g, LocRat(w(0, 0) + h()),
                                          ExtAffineWeyl::translation(Coweight::unit(g, 0, 0)));
    CHECK(lhs == rhs);
    CHECK(lhs * SmashElement::unit(g) == lhs);
    CHECK(SmashElement::unit(g) * lhs == lhs);
}

TEST_CASE("one step shift product") {
    GaugeData g = a1_11();
    SmashElement u = SmashElement::shift_u(g, 0, 0);
    MultiPoly half_h = MultiPoly::constant(1, 2) * h();
    SmashElement minus_e = SmashElement::term(
        g, LocRat(w(0, 0) - z(0) - half_h),
        ExtAffineWeyl::translation(-Coweight::unit(g, 0, 0)));
    SmashElement prod = u * minus_e;
    CHECK(prod == SmashElement::poly(g, w(0, 0) - z(0) + half_h));
}

TEST_CASE("act on functions") {
    GaugeData g = a1_11();
    SmashElement u = SmashElement::shift_u(g, 0, 0);
    CHECK(u.act_on_function(LocRat(w(0, 0) * w(0, 0))) ==
          LocRat((w(0, 0) + h()) * (w(0, 0) + h())));

    GaugeData g2 = a1_2();
    LocRat inv_root = LocRat(MultiPoly::constant(1))
                          .div_by_form(VarId::gauge(0, 0), VarId::gauge(0, 1), Scalar(0));
    SmashElement dd = SmashElement::coeff(g2, inv_root) *
                      (SmashElement::unit(g2) - SmashElement::reflection(g2, 0, 0));
    CHECK(dd.act_on_function(LocRat(w(0, 0))) == LocRat::constant(1));

    SmashElement e = Scalar(1, 2) * (SmashElement::unit(g2) + SmashElement::reflection(g2, 0, 0));
    CHECK(e.act_on_function(LocRat(w(0, 0))) ==
          LocRat(MultiPoly::constant(1, 2) * (w(0, 0) + w(0, 1))));
}

TEST_CASE("associativity and representation") {
    GaugeData g = GaugeData::make(Quiver::make(2, {{0, 1}}), {2, 1}, {1, 0}, {0});
    std::mt19937 rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        SmashElement a = random_elem(g, rng);
        SmashElement b = random_elem(g, rng);
        SmashElement c = random_elem(g, rng);
        CHECK((a * b) * c == a * (b * c));

        LocRat f(random_poly(g, rng));
        CHECK((a * b).act_on_function(f) == a.act_on_function(b.act_on_function(f)));
    }
}

TEST_CASE("commutators h-divisible") {
    GaugeData g = GaugeData::make(Quiver::make(2, {{0, 1}}), {2, 1}, {1, 0}, {0});
    std::mt19937 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        SmashElement a = random_poly_shift_elem(g, rng);
        SmashElement b = random_poly_shift_elem(g, rng);
        SmashElement c = commutator(a, b);
        auto quotient = c.div_h();
        REQUIRE(quotient.has_value());
        CHECK(*quotient * SmashElement::poly(g, h()) == c * SmashElement::unit(g));
    }
    SmashElement u = SmashElement::shift_u(g, 0, 0);
    CHECK(commutator(u, SmashElement::poly(g, w(0, 0))) ==
          SmashElement::poly(g, h()) * u);
}

TEST_CASE("gradings") {
    GaugeData g = a1_11();
    SmashElement unit = SmashElement::unit(g);
    CHECK(unit.weight() == std::vector<int>{0});
    CHECK(unit.degree() == 0);

    SmashElement f_img = SmashElement::shift_u(g, 0, 0);
    SmashElement e_img = -SmashElement::term(
        g, LocRat(w(0, 0) - z(0) - MultiPoly::constant(1, 2) * h()),
        ExtAffineWeyl::translation(-Coweight::unit(g, 0, 0)));
    CHECK(f_img.weight() == std::vector<int>{1});
    CHECK(e_img.weight() == std::vector<int>{-1});
    CHECK(e_img.degree() == 1);
    CHECK(!(e_img + f_img).weight().has_value());
    CHECK(!SmashElement::poly(g, w(0, 0) + h() * h()).degree().has_value());
    CHECK(SmashElement::zero(g).weight() == std::vector<int>{0});
}

TEST_CASE("mismatched gauge data") {
    GaugeData g1 = a1_11();
    GaugeData g1_clone = a1_11();
    GaugeData g2 = a1_2();
    CHECK_NOTHROW(SmashElement::unit(g1) * SmashElement::unit(g1_clone));
    CHECK_THROWS_AS(SmashElement::unit(g1) + SmashElement::unit(g2), std::invalid_argument);
}

TEST_CASE("serialization") {
    GaugeData g = GaugeData::make(Quiver::make(2, {{0, 1}}), {2, 1}, {1, 0}, {0});
    SmashElement zero = SmashElement::zero(g);
    CHECK(zero.to_string() == "0");
    CHECK(SmashElement::parse(g, "0") == zero);

    ExtAffineWeyl x = ExtAffineWeyl::translation(Coweight::unit(g, 0, 0) -
                                                 Coweight::unit(g, 1, 0)) *
                      ExtAffineWeyl::reflection(g, 0, 0);
    LocRat c = LocRat(w(0, 0)).div_by_form(VarId::gauge(0, 0), VarId::gauge(0, 1), Scalar(0));
    SmashElement a = SmashElement::term(g, c, x) + SmashElement::unit(g);
    CHECK(a.to_string() ==
          "(1) * s[1 2|1] * u[0 0|0] + "
          "(w[1,1]) / ((w[1,1] - w[1,2])) * s[2 1|1] * u[1 0|-1]");
    CHECK(SmashElement::parse(g, a.to_string()) == a);

    SmashElement sq = SmashElement::coeff(
        g, LocRat(h()).div_by_form(VarId::gauge(0, 0), VarId::gauge(0, 1), Scalar(1))
               .div_by_form(VarId::gauge(0, 0), VarId::gauge(0, 1), Scalar(1)));
    CHECK(sq.to_string() == "(h) / ((w[1,1] - w[1,2] - h)^2) * s[1 2|1] * u[0 0|0]");
    CHECK(SmashElement::parse(g, sq.to_string()) == sq);

    GaugeData gf = a1_11();
    SmashElement em = SmashElement::term(
        gf, LocRat(w(0, 0) - z(0) - MultiPoly::constant(1, 2) * h()),
        ExtAffineWeyl::translation(-Coweight::unit(gf, 0, 0)));
    CHECK(em.to_string(HMode::One) == "(w[1,1] - z[1] - 1/2) * s[1] * u[-1]");

    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        SmashElement r = random_elem(g, rng);
        CHECK(SmashElement::parse(g, r.to_string()) == r);
    }

    CHECK_THROWS_AS(SmashElement::parse(g, "(1) * s[1 2|1]"), std::invalid_argument);
    CHECK_THROWS_AS(SmashElement::parse(g, "(1) * s[3 2|1] * u[0 0|0]"),
                    std::invalid_argument);
}
