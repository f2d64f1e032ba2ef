#include "coulomb/abelian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "coulomb/linalg.hpp"

namespace coulomb {

namespace {

MultiPoly half_h(int sign) {
    MultiPoly p = MultiPoly::variable(VarId::loop());
    p.mul_scalar(scalar_of(sign, 2));
    return p;
}

/// w[i,r] - w[j,s] + sign*h/2.
MultiPoly edge_factor(int i, int r, int j, int s, int sign) {
    return MultiPoly::variable(VarId::gauge(i, r)) - MultiPoly::variable(VarId::gauge(j, s)) +
           half_h(sign);
}

AbelianClass apply_step(const GaugeData& g, const AbelianClass& cur, int sign, int i, int r) {
    MultiPoly factor = step_factor(g, sign, i, r, cur.lam);
    SmashElement prod = r_unit(g, sign, i, r).realization * cur.realization;
    const auto& [grp, coeff] = *prod.terms().begin();
    if (!coeff.is_poly()) throw std::logic_error("inconsistent Phi convention");
    auto q = coeff.num().divide_exact(factor);
    if (!q) throw std::logic_error("inconsistent Phi convention");
    AbelianClass out;
    out.lam = cur.lam;
    out.lam.at(i, r) += sign;
    out.realization = SmashElement::term(g, LocRat(std::move(*q)), grp);
    return out;
}

AbelianClass r_trivial(const GaugeData& g) {
    return AbelianClass{Coweight::zero(g), SmashElement::unit(g)};
}

MultiPoly at_h_one(const MultiPoly& f) {
    return f.substitute({{VarId::loop(), MultiPoly::constant(1)}});
}

std::string wrap_child(const RTree& t) {
    bool atom = t.kind == RTree::Kind::One || t.kind == RTree::Kind::Unit;
    return atom ? t.to_string() : "(" + t.to_string() + ")";
}

/// Polynomial c_s with sum c_s * b_s = 1, searched degree by degree.
std::vector<MultiPoly> bezout_combination(const std::vector<MultiPoly>& b, int degree_bound) {
    std::set<VarId> varset;
    for (const auto& f : b)
        for (const auto& [m, c] : f.terms())
            for (const auto& [v, e] : m) varset.insert(v);
    std::vector<VarId> vars(varset.begin(), varset.end());

    for (int d = 0; d <= degree_bound; ++d) {
        std::vector<Monomial> basis = monomials_up_to(vars, d);
        // Column (s, k) holds the coefficients of b_s * basis_k per row monomial.
        std::vector<MultiPoly> cols;
        for (const auto& f : b)
            for (const auto& m : basis) {
                MultiPoly shifted;
                shifted.add_term(m, Scalar(1));
                cols.push_back(f * shifted);
            }
        std::map<Monomial, std::size_t, MonomialLess> row_of;
        row_of.emplace(Monomial{}, 0);
        for (const auto& c : cols)
            for (const auto& [m, s] : c.terms()) row_of.emplace(m, row_of.size());
        std::vector<std::vector<Scalar>> a(row_of.size(),
                                           std::vector<Scalar>(cols.size(), Scalar(0)));
        for (std::size_t k = 0; k < cols.size(); ++k)
            for (const auto& [m, s] : cols[k].terms()) a[row_of.at(m)][k] = s;
        std::vector<Scalar> rhs(row_of.size(), Scalar(0));
        rhs[0] = Scalar(1);
        auto sol = solve_linear(a, rhs);
        if (!sol) continue;
        std::vector<MultiPoly> c(b.size());
        for (std::size_t s = 0; s < b.size(); ++s)
            for (std::size_t k = 0; k < basis.size(); ++k)
                c[s].add_term(basis[k], (*sol)[s * basis.size() + k]);
        return c;
    }
    throw std::runtime_error("increase degree bound");
}

RTree decompose_rec(const GaugeData& g, const Coweight& lam, int degree_bound,
                    std::map<Coweight, RTree>& memo) {
    if (auto it = memo.find(lam); it != memo.end()) return it->second;
    RTree out;
    if (lam.is_zero()) {
        out.kind = RTree::Kind::One;
        memo.emplace(lam, out);
        return out;
    }
    int hi = 0, lo = 0;
    for (const auto& row : lam.lam)
        for (int x : row) {
            hi = std::max(hi, x);
            lo = std::min(lo, x);
        }
    int sign = hi > 0 ? 1 : -1;
    int extreme = hi > 0 ? hi : lo;
    std::vector<std::pair<int, int>> support;
    for (int i = 0; i < g.nvertices(); ++i)
        for (int r = 0; r < g.v[i]; ++r)
            if (lam.at(i, r) == extreme) support.emplace_back(i, r);

    std::vector<MultiPoly> b;
    std::vector<Coweight> rests;
    for (auto [i, r] : support) {
        Coweight mu = lam - Coweight::unit(g, i, r, sign);
        b.push_back(at_h_one(step_factor(g, sign, i, r, mu)));
        rests.push_back(std::move(mu));
    }
    std::vector<MultiPoly> c = bezout_combination(b, degree_bound);

    std::vector<RTree> children;
    for (std::size_t s = 0; s < support.size(); ++s) {
        if (c[s].is_zero()) continue;
        RTree leaf;
        leaf.kind = RTree::Kind::Unit;
        leaf.sign = sign;
        leaf.i = support[s].first;
        leaf.r = support[s].second;
        RTree rest = decompose_rec(g, rests[s], degree_bound, memo);
        RTree prod;
        if (rest.kind == RTree::Kind::One) {
            prod = leaf;
        } else {
            prod.kind = RTree::Kind::Prod;
            prod.children = {leaf, rest};
        }
        if (c[s] == MultiPoly::constant(1)) {
            children.push_back(std::move(prod));
        } else {
            RTree scaled;
            scaled.kind = RTree::Kind::Scale;
            scaled.factor = c[s];
            scaled.children = {std::move(prod)};
            children.push_back(std::move(scaled));
        }
    }
    if (children.size() == 1) {
        out = children[0];
    } else {
        out.kind = RTree::Kind::Sum;
        out.children = std::move(children);
    }
    memo.emplace(lam, out);
    return out;
}

}  // namespace

AbelianClass r_unit(const GaugeData& g, int sign, int i, int r) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("bad step sign");
    if (i < 0 || i >= g.nvertices() || r < 0 || r >= g.v[i])
        throw std::invalid_argument("bad step slot");
    MultiPoly phi = MultiPoly::constant(1);
    if (sign > 0) {
        for (int j : g.quiver.out(i))
            for (int s = 0; s < g.v[j]; ++s) phi *= edge_factor(i, r, j, s, 1);
        MultiPoly cof = MultiPoly::variable(VarId::gauge(i, r)) + half_h(1);
        phi *= cof.pow(g.coframing[i]);
    } else {
        for (int k : g.flavours_at(i))
            phi *= MultiPoly::variable(VarId::gauge(i, r)) - g.flavour_poly(k) - half_h(1);
        for (int j : g.quiver.in(i))
            for (int s = 0; s < g.v[j]; ++s) phi *= edge_factor(i, r, j, s, -1);
    }
    AbelianClass out;
    out.lam = Coweight::unit(g, i, r, sign);
    out.realization = SmashElement::term(g, LocRat(std::move(phi)),
                                         ExtAffineWeyl::translation(out.lam));
    return out;
}

MultiPoly step_factor(const GaugeData& g, int sign, int i, int r, const Coweight& lam) {
    if (sign * lam.at(i, r) < 0) throw std::invalid_argument("formula not applicable");
    MultiPoly factor = MultiPoly::constant(1);
    int self = lam.at(i, r);
    if (sign > 0) {
        for (int j : g.quiver.out(i))
            for (int s = 0; s < g.v[j]; ++s)
                if (self < lam.at(j, s)) factor *= edge_factor(j, s, i, r, -1);
        for (int j : g.quiver.in(i))
            for (int s = 0; s < g.v[j]; ++s)
                if (self < lam.at(j, s)) factor *= edge_factor(i, r, j, s, 1);
    } else {
        for (int j : g.quiver.out(i))
            for (int s = 0; s < g.v[j]; ++s)
                if (lam.at(j, s) < self) factor *= edge_factor(j, s, i, r, 1);
        for (int j : g.quiver.in(i))
            for (int s = 0; s < g.v[j]; ++s)
                if (lam.at(j, s) < self) factor *= edge_factor(i, r, j, s, -1);
    }
    return factor;
}

AbelianClass r_general(const GaugeData& g, const Coweight& lam) {
    AbelianClass cur = r_trivial(g);
    for (int i = 0; i < g.nvertices(); ++i)
        for (int r = 0; r < g.v[i]; ++r)
            for (int t = 0; t < lam.at(i, r); ++t) cur = apply_step(g, cur, 1, i, r);
    for (int i = 0; i < g.nvertices(); ++i)
        for (int r = 0; r < g.v[i]; ++r)
            for (int t = 0; t < -lam.at(i, r); ++t) cur = apply_step(g, cur, -1, i, r);
    return cur;
}

AbelianClass r_general_ordered(const GaugeData& g,
                               const std::vector<std::tuple<int, int, int>>& steps) {
    AbelianClass cur = r_trivial(g);
    for (const auto& [sign, i, r] : steps) cur = apply_step(g, cur, sign, i, r);
    return cur;
}

ProductFormulaReport verify_product_formula(const GaugeData& g, int sign, int i, int r,
                                            const Coweight& lam) {
    MultiPoly factor = step_factor(g, sign, i, r, lam);
    SmashElement lhs = r_unit(g, sign, i, r).realization * r_general(g, lam).realization;
    SmashElement rhs = SmashElement::poly(g, factor) *
                       r_general(g, lam + Coweight::unit(g, i, r, sign)).realization;
    ProductFormulaReport rep;
    rep.pass = lhs == rhs;
    rep.lhs = lhs.to_string();
    rep.rhs = rhs.to_string();
    return rep;
}

std::string RTree::to_string() const {
    switch (kind) {
        case Kind::One:
            return "1";
        case Kind::Unit:
            return std::string("r[") + (sign > 0 ? "+" : "-") + "," + std::to_string(i + 1) +
                   "," + std::to_string(r + 1) + "]";
        case Kind::Scale:
            return "(" + factor.to_string() + ") * " + wrap_child(children[0]);
        case Kind::Prod: {
            std::string out;
            for (const auto& c : children) {
                if (!out.empty()) out += " * ";
                out += wrap_child(c);
            }
            return out;
        }
        case Kind::Sum: {
            if (children.empty()) return "0";
            std::string out;
            for (const auto& c : children) {
                if (!out.empty()) out += " + ";
                out += c.to_string();
            }
            return out;
        }
    }
    return "";
}

RTree decompose_r(const GaugeData& g, const Coweight& lam, int degree_bound) {
    std::map<Coweight, RTree> memo;
    return decompose_rec(g, lam, degree_bound, memo);
}

HOneElement HOneElement::operator+(const HOneElement& o) const {
    HOneElement out = *this;
    for (const auto& [mu, f] : o.terms) {
        auto [it, fresh] = out.terms.emplace(mu, f);
        if (!fresh) {
            it->second += f;
            if (it->second.is_zero()) out.terms.erase(it);
        }
    }
    return out;
}

HOneElement HOneElement::operator*(const HOneElement& o) const {
    HOneElement out;
    for (const auto& [mu, f] : terms) {
        std::map<VarId, MultiPoly> images;
        for (std::size_t i = 0; i < mu.lam.size(); ++i)
            for (std::size_t r = 0; r < mu.lam[i].size(); ++r)
                if (mu.lam[i][r] != 0) {
                    VarId v = VarId::gauge(static_cast<int>(i), static_cast<int>(r));
                    images.emplace(v, MultiPoly::variable(v) +
                                          MultiPoly::constant(mu.lam[i][r]));
                }
        for (const auto& [nu, k] : o.terms) {
            MultiPoly prod = f * k.substitute(images);
            if (prod.is_zero()) continue;
            Coweight key = mu + nu;
            auto [it, fresh] = out.terms.emplace(key, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    }
    return out;
}

HOneElement& HOneElement::scale(const MultiPoly& f) {
    HOneElement out;
    for (const auto& [mu, k] : terms) {
        MultiPoly prod = f * k;
        if (!prod.is_zero()) out.terms.emplace(mu, std::move(prod));
    }
    terms = std::move(out.terms);
    return *this;
}

std::string HOneElement::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [mu, f] : terms) {
        if (!out.empty()) out += " + ";
        out += "(" + f.to_string() + ") * u[" + mu.to_string() + "]";
    }
    return out;
}

HOneElement h_one(const AbelianClass& c) {
    HOneElement out;
    for (const auto& [grp, coeff] : c.realization.terms()) {
        if (!coeff.is_poly()) throw std::logic_error("inconsistent Phi convention");
        MultiPoly f = at_h_one(coeff.num());
        if (!f.is_zero()) out.terms.emplace(grp.translation_part(), std::move(f));
    }
    return out;
}

HOneElement h_one_eval(const GaugeData& g, const RTree& t) {
    switch (t.kind) {
        case RTree::Kind::One: {
            HOneElement out;
            out.terms.emplace(Coweight::zero(g), MultiPoly::constant(1));
            return out;
        }
        case RTree::Kind::Unit:
            return h_one(r_unit(g, t.sign, t.i, t.r));
        case RTree::Kind::Scale: {
            HOneElement out = h_one_eval(g, t.children[0]);
            out.scale(t.factor);
            return out;
        }
        case RTree::Kind::Prod: {
            HOneElement out = h_one_eval(g, t.children[0]);
            for (std::size_t s = 1; s < t.children.size(); ++s)
                out = out * h_one_eval(g, t.children[s]);
            return out;
        }
        case RTree::Kind::Sum: {
            HOneElement out;
            for (const auto& c : t.children) out = out + h_one_eval(g, c);
            return out;
        }
    }
    return {};
}

}  // namespace coulomb
