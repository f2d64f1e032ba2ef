#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <string>
#include <vector>

#include "coulomb/klr.hpp"
#include "doctest.h"

using namespace coulomb;

namespace {

GaugeData sl2_theory() { return GaugeData::make(Quiver::make(1, {}), {1}, {1}, {0}); }

GaugeData rank2_theory() { return GaugeData::make(Quiver::make(1, {}), {2}, {2}, {0, 0}); }

GaugeData chain_theory() {
    return GaugeData::make(Quiver::make(2, {{0, 1}}), {1, 1}, {0, 1}, {1});
}

GaugeData coframed_theory() {
    return GaugeData::make(Quiver::make(1, {}), {1}, {0}, {}, {}, {1});
}

GaugeData mixed_theory() {
    return GaugeData::make(Quiver::make(2, {{0, 1}}), {2, 1}, {1, 1}, {0, 1});
}

std::vector<Slice> random_slices(std::mt19937& rng, const std::vector<int>& bot, int count) {
    int m = static_cast<int>(bot.size());
    std::vector<Slice> out;
    for (int j = 0; j < count; ++j) {
        switch (rng() % 5) {
            case 0: out.push_back(Slice::e()); break;
            case 1:
                if (m >= 2) {
                    out.push_back(Slice::psi(static_cast<int>(rng() % (m - 1))));
                    break;
                }
                [[fallthrough]];
            case 2: out.push_back(Slice::sigma_plus()); break;
            case 3: out.push_back(Slice::sigma_minus()); break;
            default: out.push_back(Slice::dot(static_cast<int>(rng() % m))); break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("slice semantics") {
    std::vector<int> bot{0, 0, 1};
    CHECK(slice_top(Slice::e(), bot) == bot);
    CHECK(slice_top(Slice::dot(1), bot) == bot);
    CHECK(slice_top(Slice::psi(1), bot) == std::vector<int>{0, 1, 0});
    CHECK(slice_top(Slice::sigma_plus(), bot) == std::vector<int>{1, 0, 0});
    CHECK(slice_top(Slice::sigma_minus(), bot) == std::vector<int>{0, 1, 0});
    CHECK_THROWS_WITH(slice_top(Slice::dot(3), bot), "dot position out of range");
    CHECK_THROWS_WITH(slice_top(Slice::psi(2), bot), "crossing position out of range");
    CHECK_THROWS_WITH(slice_top(Slice::sigma_plus(), {}), "seam slice needs a strand");
}

TEST_CASE("diagram construction") {
    GaugeData g = mixed_theory();
    std::vector<int> bot = canonical_sequence(g);
    CHECK(bot == std::vector<int>{0, 0, 1});

    CylDiagram d = CylDiagram::make(g, bot, {Slice::psi(1), Slice::sigma_plus()});
    CHECK(d.bot() == bot);
    CHECK(d.top() == std::vector<int>{0, 0, 1});
    CHECK(d.slices()[0].bot == bot);
    CHECK(d.slices()[1].bot == std::vector<int>{0, 1, 0});

    CHECK_THROWS_WITH(CylDiagram::make(g, {0, 0, 2}, {}), "bad sequence: unknown vertex");
    CHECK_THROWS_WITH(CylDiagram::make(g, {0, 1, 1}, {}), "bad sequence: counts must match v");
    CHECK_THROWS_WITH(parse_diagram(g, {}), "empty slice list");

    Slice first = Slice::psi(0);
    first.bot = bot;
    Slice second = Slice::psi(1);
    second.bot = {0, 1, 0};
    CHECK_THROWS_WITH(parse_diagram(g, {first, second}), "label mismatch between slices");
    second.bot = bot;
    CHECK(parse_diagram(g, {first, second}).top() == std::vector<int>{0, 1, 0});
}

TEST_CASE("text round trip") {
    GaugeData g = mixed_theory();
    CylDiagram w = wrap_diagram(g, canonical_sequence(g), 0, 1, 1);
    std::string text = "objects: 1 1 2\npsi 2\nsigma +\ndot 1\npsi 1\n";
    CHECK(diagram_to_text(w) == text);
    CHECK(diagram_to_text(diagram_from_text(g, text)) == text);

    CHECK_THROWS_WITH(diagram_from_text(g, "psi 1\n"), "line 1: expected objects header");
    CHECK_THROWS_WITH(diagram_from_text(g, "objects: 0 1 2\n"), "line 1: bad vertex label");
    CHECK_THROWS_WITH(diagram_from_text(g, "objects: 1 3\n"), "bad sequence: unknown vertex");
    CHECK_THROWS_WITH(diagram_from_text(g, "objects: 1 1 2\nspin 1\n"),
                      "line 2: unknown slice");
    CHECK_THROWS_WITH(diagram_from_text(g, "objects: 1 1 2\npsi 0\n"), "line 2: bad position");
    CHECK_THROWS_WITH(diagram_from_text(g, ""), "missing objects header");
}

TEST_CASE("unroll records wall crossings") {
    GaugeData g = sl2_theory();
    UnrolledPath idp = unroll(CylDiagram::make(g, {0}, {}));
    CHECK(idp.events.empty());
    CHECK(idp.terminal == ExtAffineWeyl::identity(g));

    UnrolledPath right = unroll(wrap_diagram(g, {0}, 0, 1));
    REQUIRE(right.events.size() == 1);
    CHECK(right.events[0].to_string() == "weight w[1,1]=1 up");
    CHECK(right.terminal.shift_string() == "-1");

    UnrolledPath left = unroll(wrap_diagram(g, {0}, 0, -1));
    REQUIRE(left.events.size() == 1);
    CHECK(left.events[0].to_string() == "weight w[1,1]=0 down");
    CHECK(left.terminal.shift_string() == "1");

    // Strands of non-adjacent distinct labels cross without a wall.
    GaugeData two = GaugeData::make(Quiver::make(2, {}), {1, 1}, {1, 1}, {0, 1});
    UnrolledPath free = unroll(CylDiagram::make(two, {0, 1}, {Slice::psi(0)}));
    CHECK(free.events.empty());
    CHECK(free.terminal == ExtAffineWeyl::identity(two));

    GaugeData chain = chain_theory();
    UnrolledPath arrow = unroll(CylDiagram::make(chain, {0, 1}, {Slice::psi(0)}));
    REQUIRE(arrow.events.size() == 1);
    CHECK(arrow.events[0].to_string() == "weight w[1,1]-w[2,1]=0 up");
}

TEST_CASE("wrap evaluations match difference operators") {
    GaugeData g = sl2_theory();
    SmashElement right = evaluate(wrap_diagram(g, {0}, 0, 1));
    SmashElement left = evaluate(wrap_diagram(g, {0}, 0, -1));
    CHECK(right.to_string() == "(1) * s[1] * u[1]");
    CHECK(left.to_string() == "(w[1,1] - z[1] - 1/2*h) * s[1] * u[-1]");
    CHECK(right == image(g, {GenTag::F, 0, 1}));
    CHECK(left == -image(g, {GenTag::E, 0, 1}));

    GaugeData chain = chain_theory();
    std::vector<int> bot = canonical_sequence(chain);
    CHECK(evaluate(wrap_diagram(chain, bot, 0, 1)) ==
          dressed_monopole(chain, {Coweight::unit(chain, 0, 0, 1), MultiPoly::constant(1)}));
    CHECK(evaluate(wrap_diagram(chain, bot, 1, -1)) ==
          dressed_monopole(chain, {Coweight::unit(chain, 1, 0, -1), MultiPoly::constant(1)}));

    GaugeData cofr = coframed_theory();
    SmashElement cr = evaluate(wrap_diagram(cofr, {0}, 0, 1));
    CHECK(cr.to_string() == "(w[1,1] + 1/2*h) * s[1] * u[1]");
    CHECK(cr == dressed_monopole(cofr, {Coweight::unit(cofr, 0, 0, 1), MultiPoly::constant(1)}));
    CHECK(evaluate(wrap_diagram(cofr, {0}, 0, -1)) ==
          dressed_monopole(cofr, {Coweight::unit(cofr, 0, 0, -1), MultiPoly::constant(1)}));
}

TEST_CASE("stacking is multiplicative") {
    GaugeData g = sl2_theory();
    CylDiagram right = wrap_diagram(g, {0}, 0, 1);
    CylDiagram left = wrap_diagram(g, {0}, 0, -1);
    SmashElement prod = evaluate(stack(right, left));
    CHECK(prod.to_string() == "(w[1,1] - z[1] + 1/2*h) * s[1] * u[0]");
    CHECK(prod == evaluate(right) * evaluate(left));

    CylDiagram idd = CylDiagram::make(g, {0}, {Slice::e()});
    CHECK(evaluate(stack(idd, right)) == evaluate(right));

    GaugeData mixed = mixed_theory();
    CylDiagram shifted =
        CylDiagram::make(mixed, {1, 0, 0}, {Slice::psi(0), Slice::psi(1)});
    CHECK_THROWS_WITH(static_cast<void>(stack(shifted, shifted)), "object mismatch");

    std::vector<int> bot = canonical_sequence(mixed);
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 30; ++trial) {
        CylDiagram d2 = CylDiagram::make(mixed, bot, random_slices(rng, bot, 1 + rng() % 5));
        CylDiagram d1 =
            CylDiagram::make(mixed, d2.top(), random_slices(rng, d2.top(), 1 + rng() % 5));
        CHECK(evaluate(stack(d1, d2)) == evaluate(d1) * evaluate(d2));
    }
}

TEST_CASE("crossing relations") {
    GaugeData g = rank2_theory();
    CHECK(evaluate(CylDiagram::make(g, {0, 0}, {Slice::psi(0), Slice::psi(0)})) ==
          SmashElement::zero(g));

    GaugeData g3 = GaugeData::make(Quiver::make(1, {}), {3}, {1}, {0});
    CylDiagram lhs = CylDiagram::make(
        g3, {0, 0, 0}, {Slice::psi(0), Slice::psi(1), Slice::psi(0)});
    CylDiagram rhs = CylDiagram::make(
        g3, {0, 0, 0}, {Slice::psi(1), Slice::psi(0), Slice::psi(1)});
    CHECK(isotopy_check(lhs, rhs).pass);
}

TEST_CASE("isotopy and slides") {
    GaugeData g = mixed_theory();
    std::vector<int> bot = canonical_sequence(g);
    CylDiagram d = CylDiagram::make(
        g, bot, {Slice::dot(2), Slice::psi(0), Slice::dot(2), Slice::sigma_plus()});
    std::vector<CylDiagram> variants = slide_variants(d);
    CHECK(variants.size() == 2);
    for (const CylDiagram& v : variants) CHECK(isotopy_check(d, v).pass);

    CylDiagram padded = CylDiagram::make(
        g, bot,
        {Slice::e(), Slice::dot(2), Slice::psi(0), Slice::dot(2), Slice::sigma_plus(),
         Slice::e()});
    CHECK(isotopy_check(d, padded).pass);

    IsotopyReport bad = isotopy_check(
        d, CylDiagram::make(
               g, bot, {Slice::dot(2), Slice::psi(0), Slice::dot(0), Slice::sigma_plus()}));
    CHECK(!bad.pass);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        CylDiagram r = CylDiagram::make(g, bot, random_slices(rng, bot, 2 + rng() % 5));
        for (const CylDiagram& v : slide_variants(r)) CHECK(isotopy_check(r, v).pass);
    }
}

TEST_CASE("basis diagrams and triangularity") {
    GaugeData g = sl2_theory();
    std::vector<BasisDiagram> basis = basis_diagrams(g, {0}, {0}, 2);
    REQUIRE(basis.size() == 5);
    CHECK(basis[0].length == 0);
    CHECK(basis[0].w == ExtAffineWeyl::identity(g));
    CHECK(basis[0].diagram.slices().size() == 1);
    CHECK(basis[0].diagram.slices()[0].kind == Slice::Kind::E);
    CHECK(basis[1].w.shift_string() == "-1");
    CHECK(basis[2].w.shift_string() == "1");
    CHECK(basis[3].w.shift_string() == "-2");
    CHECK(basis[4].w.shift_string() == "2");
    CHECK(evaluate(basis[2].diagram).to_string() == "(1) * s[1] * u[1]");
    CHECK(evaluate(basis[1].diagram).to_string() ==
          "(w[1,1] - z[1] - 1/2*h) * s[1] * u[-1]");
    CHECK(evaluate(basis[4].diagram).to_string() == "(1) * s[1] * u[2]");
    CHECK(evaluate(basis[3].diagram).to_string() ==
          "(w[1,1]^2 - 2*w[1,1]*z[1] - 2*w[1,1]*h + z[1]^2 + 2*z[1]*h + 3/4*h^2)"
          " * s[1] * u[-2]");
    for (const BasisDiagram& bd : basis) CHECK(wall_length(g, {0}, {0}, bd.w) == bd.length);

    TriangularityReport rep = triangularity_check(g, {0}, {0}, basis);
    CHECK(rep.pass);
    REQUIRE(rep.lines.size() == 5);
    CHECK(rep.lines[0] == "perm=1 shift=0 length=0 support=1 ok");
    CHECK(rep.lines[1] == "perm=1 shift=-1 length=1 support=1 ok");

    GaugeData r2 = rank2_theory();
    std::vector<BasisDiagram> basis2 = basis_diagrams(r2, {0, 0}, {0, 0}, 2);
    CHECK(basis2.size() == 10);
    TriangularityReport rep2 = triangularity_check(r2, {0, 0}, {0, 0}, basis2);
    CHECK(rep2.pass);
    CHECK(rep2.lines[2] == "perm=2 1 shift=0 0 length=1 support=2 ok");

    GaugeData mixed = mixed_theory();
    std::vector<int> bot = canonical_sequence(mixed);
    std::vector<BasisDiagram> basis3 = basis_diagrams(mixed, bot, bot, 2);
    CHECK(basis3.size() == 4);
    CHECK(triangularity_check(mixed, bot, bot, basis3).pass);

    std::vector<int> rotated{1, 0, 0};
    std::vector<BasisDiagram> basis4 = basis_diagrams(mixed, bot, rotated, 1);
    CHECK(basis4.size() == 1);
    CHECK(triangularity_check(mixed, bot, rotated, basis4).pass);
}

TEST_CASE("wrap against iwahori monopoles") {
    GaugeData g = sl2_theory();
    for (int sign : {1, -1})
        for (int p : {1, 2}) {
            WrapReport rep = wrap_vs_iwahori(g, 0, sign, p);
            CHECK(rep.pass);
            CHECK(rep.sign == 1);
        }

    GaugeData r2 = rank2_theory();
    for (int sign : {1, -1})
        for (int p : {1, 2}) {
            WrapReport rep = wrap_vs_iwahori(r2, 0, sign, p);
            CHECK(rep.pass);
            CHECK(rep.sign == -1);
        }

    GaugeData chain = chain_theory();
    WrapReport c0p = wrap_vs_iwahori(chain, 0, 1);
    CHECK(c0p.pass);
    CHECK(c0p.sign == -1);
    WrapReport c0m = wrap_vs_iwahori(chain, 0, -1);
    CHECK(c0m.pass);
    CHECK(c0m.sign == 1);
    for (int sign : {1, -1}) {
        WrapReport rep = wrap_vs_iwahori(chain, 1, sign);
        CHECK(rep.pass);
        CHECK(rep.sign == 1);
    }

    GaugeData cofr = coframed_theory();
    for (int sign : {1, -1}) {
        WrapReport rep = wrap_vs_iwahori(cofr, 0, sign);
        CHECK(rep.pass);
        CHECK(rep.sign == 1);
    }
}

TEST_CASE("wrap diagram validation") {
    GaugeData g = mixed_theory();
    std::vector<int> bot = canonical_sequence(g);
    CHECK_THROWS_WITH(static_cast<void>(wrap_diagram(g, bot, 2, 1)), "vertex out of range");
    CHECK_THROWS_WITH(static_cast<void>(wrap_diagram(g, bot, 0, 0)), "sign must be +1 or -1");
    CHECK_THROWS_WITH(static_cast<void>(wrap_diagram(g, bot, 0, 1, -1)), "negative dot count");
    CHECK_THROWS_WITH(static_cast<void>(wrap_vs_iwahori(g, 0, 1, 0)), "power must be positive");

    CylDiagram w = wrap_diagram(g, bot, 0, -1, 2);
    CHECK(w.bot() == bot);
    CHECK(w.top() == bot);
}
