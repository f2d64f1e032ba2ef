#include "coulomb/nilhecke.hpp"

#include <stdexcept>

#include "coulomb/linalg.hpp"

namespace coulomb {

SmashElement divided_difference(const GaugeData& g, int i, int a) {
    LocRat inv_root = LocRat(MultiPoly::constant(1))
                          .div_by_form(VarId::gauge(i, a), VarId::gauge(i, a + 1), Scalar(0));
    return SmashElement::coeff(g, inv_root) *
           (SmashElement::unit(g) - SmashElement::reflection(g, i, a));
}

SmashElement demazure(const GaugeData& g, const ReducedWord& word) {
    std::vector<Perm> cur;
    for (int i = 0; i < g.nvertices(); ++i) cur.push_back(perm_identity(g.v[i]));
    SmashElement out = SmashElement::unit(g);
    for (auto [i, a] : word) {
        if (i < 0 || i >= g.nvertices() || a < 0 || a + 1 >= g.v[i])
            throw std::invalid_argument("demazure: letter out of range");
        if (cur[i][a] > cur[i][a + 1]) throw std::invalid_argument("word not reduced");
        std::swap(cur[i][a], cur[i][a + 1]);
        out *= divided_difference(g, i, a);
    }
    return out;
}

ReducedWord longest_word(const GaugeData& g) {
    ReducedWord word;
    for (int i = 0; i < g.nvertices(); ++i)
        for (int a : reduced_word(perm_longest(g.v[i]))) word.emplace_back(i, a);
    return word;
}

ReducedWord vertex_word(int i, const Perm& p) {
    ReducedWord word;
    for (int a : reduced_word(p)) word.emplace_back(i, a);
    return word;
}

namespace {

long group_order(const GaugeData& g) {
    long n = 1;
    for (int i = 0; i < g.nvertices(); ++i)
        for (int k = 2; k <= g.v[i]; ++k) n *= k;
    return n;
}

SmashElement positive_root_product(const GaugeData& g) {
    MultiPoly delta = MultiPoly::constant(1);
    for (int i = 0; i < g.nvertices(); ++i)
        for (int r = 0; r < g.v[i]; ++r)
            for (int s = r + 1; s < g.v[i]; ++s)
                delta *= MultiPoly::variable(VarId::gauge(i, r)) -
                         MultiPoly::variable(VarId::gauge(i, s));
    return SmashElement::poly(g, delta);
}

}  // namespace

SmashElement symmetrizer(const GaugeData& g) {
    std::vector<ExtAffineWeyl> elems{ExtAffineWeyl::identity(g)};
    for (int i = 0; i < g.nvertices(); ++i) {
        std::vector<ExtAffineWeyl> next;
        for (const auto& e : elems)
            for (const Perm& p : all_perms(g.v[i])) {
                ExtAffineWeyl x = e;
                x.perm[i] = p;
                next.push_back(std::move(x));
            }
        elems = std::move(next);
    }
    SmashElement out = SmashElement::zero(g);
    Scalar inv = Scalar(1) / Scalar(group_order(g));
    for (auto& e : elems) out += SmashElement::term(g, LocRat(MultiPoly(inv)), std::move(e));
    return out;
}

std::pair<int, SmashElement> geometric_symmetrizer(const GaugeData& g) {
    Scalar inv = Scalar(1) / Scalar(group_order(g));
    SmashElement base = demazure(g, longest_word(g)) * positive_root_product(g);
    base.mul_scalar(inv);
    for (int sign : {1, -1}) {
        SmashElement cand = sign == 1 ? base : -base;
        if (cand * cand == cand) return {sign, cand};
    }
    throw std::logic_error("geometric symmetrizer: no sign squares to an idempotent");
}

MultiPoly schubert(const GaugeData& g, int i, const Perm& sigma) {
    const int v = g.v[i];
    if (static_cast<int>(sigma.size()) != v)
        throw std::invalid_argument("schubert: permutation size mismatch");
    MultiPoly stair = MultiPoly::constant(1);
    for (int r = 0; r < v; ++r)
        if (v - 1 - r > 0) stair *= MultiPoly::variable(VarId::gauge(i, r), v - 1 - r);
    Perm rest = perm_mul(perm_inverse(sigma), perm_longest(v));
    LocRat res = demazure(g, vertex_word(i, rest)).act_on_function(LocRat(stair));
    if (!res.is_poly()) throw std::logic_error("schubert: non-polynomial result");
    return res.num();
}

namespace {

// Per-vertex dual family: x = seeds, y solved degree-wise so that
// Demazure(w0)(x_s * y_t) = delta_{s,t}.
struct VertexBases {
    std::vector<MultiPoly> x, y;
};

VertexBases vertex_dual_bases(const GaugeData& g, int i, DualBasisKind kind) {
    const int v = g.v[i];
    VertexBases out;
    if (v == 0) {
        out.x = {MultiPoly::constant(1)};
        out.y = {MultiPoly::constant(1)};
        return out;
    }
    std::vector<VarId> vars;
    for (int r = 0; r < v; ++r) vars.push_back(VarId::gauge(i, r));

    if (kind == DualBasisKind::Staircase) {
        // Exponent tuples with a_r <= v-1-r.
        std::vector<Monomial> stairs{Monomial{}};
        for (int r = 0; r < v; ++r) {
            std::vector<Monomial> next;
            for (const auto& m : stairs)
                for (int e = 0; e <= v - 1 - r; ++e) {
                    Monomial mm = m;
                    if (e > 0) mm.emplace_back(vars[r], e);
                    next.push_back(std::move(mm));
                }
            stairs = std::move(next);
        }
        for (const auto& m : stairs) {
            MultiPoly p;
            p.add_term(m, Scalar(1));
            out.x.push_back(std::move(p));
        }
    } else {
        for (const Perm& sigma : all_perms(v)) out.x.push_back(schubert(g, i, sigma));
    }

    const int lw0 = v * (v - 1) / 2;
    SmashElement dw0 = demazure(g, vertex_word(i, perm_longest(v)));
    auto pair_with = [&](const MultiPoly& a, const MultiPoly& b) {
        LocRat r = dw0.act_on_function(LocRat(a * b));
        if (!r.is_poly()) throw std::logic_error("dual bases: non-polynomial pairing");
        return r.num();
    };

    for (std::size_t t = 0; t < out.x.size(); ++t) {
        int ydeg = lw0 - out.x[t].degree();
        if (ydeg < 0) throw std::logic_error("dual bases: seed degree exceeds l(w0)");
        std::vector<Monomial> unknowns = monomials_of_degree(vars, ydeg);
        // Rows: (seed s, output monomial) pairs.
        std::vector<std::vector<MultiPoly>> images(out.x.size());
        std::map<Monomial, std::size_t, MonomialLess> row_of;
        for (std::size_t s = 0; s < out.x.size(); ++s) {
            for (const auto& um : unknowns) {
                MultiPoly mono;
                mono.add_term(um, Scalar(1));
                MultiPoly img = pair_with(out.x[s], mono);
                for (const auto& [m, c] : img.terms()) {
                    (void)c;
                    if (!m.empty()) row_of.emplace(m, row_of.size());
                }
                images[s].push_back(std::move(img));
            }
        }
        const std::size_t nrows = out.x.size() * (row_of.size() + 1);
        std::vector<std::vector<Scalar>> a(nrows, std::vector<Scalar>(unknowns.size(), Scalar(0)));
        std::vector<Scalar> b(nrows, Scalar(0));
        const std::size_t block = row_of.size() + 1;
        for (std::size_t s = 0; s < out.x.size(); ++s) {
            for (std::size_t u = 0; u < unknowns.size(); ++u)
                for (const auto& [m, c] : images[s][u].terms()) {
                    std::size_t row = s * block + (m.empty() ? 0 : 1 + row_of.at(m));
                    a[row][u] = c;
                }
            if (s == t) b[s * block] = Scalar(1);
        }
        auto sol = solve_linear(std::move(a), std::move(b));
        if (!sol) throw std::logic_error("dual bases: singular pairing");
        MultiPoly y;
        for (std::size_t u = 0; u < unknowns.size(); ++u) y.add_term(unknowns[u], (*sol)[u]);
        out.y.push_back(std::move(y));
    }
    return out;
}

}  // namespace

DualBases dual_bases(const GaugeData& g, DualBasisKind kind) {
    DualBases out;
    out.x = {MultiPoly::constant(1)};
    out.y = {MultiPoly::constant(1)};
    for (int i = 0; i < g.nvertices(); ++i) {
        VertexBases vb = vertex_dual_bases(g, i, kind);
        DualBases next;
        for (std::size_t t = 0; t < out.x.size(); ++t)
            for (std::size_t u = 0; u < vb.x.size(); ++u) {
                next.x.push_back(out.x[t] * vb.x[u]);
                next.y.push_back(out.y[t] * vb.y[u]);
            }
        out = std::move(next);
    }
    return out;
}

bool verify_dual_bases(const GaugeData& g, const DualBases& b) {
    SmashElement dw0 = demazure(g, longest_word(g));
    SmashElement total = SmashElement::zero(g);
    for (std::size_t t = 0; t < b.x.size(); ++t)
        total += SmashElement::poly(g, b.x[t]) * dw0 * SmashElement::poly(g, b.y[t]);
    return total == SmashElement::unit(g);
}

}  // namespace coulomb
