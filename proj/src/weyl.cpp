#include "coulomb/weyl.hpp"

#include <map>
#include <stdexcept>

namespace coulomb {

ExtAffineWeyl ExtAffineWeyl::identity(const GaugeData& g) {
    ExtAffineWeyl e;
    for (int i = 0; i < g.nvertices(); ++i) {
        e.perm.push_back(perm_identity(g.v[i]));
        e.shift.emplace_back(g.v[i], 0);
    }
    return e;
}

ExtAffineWeyl ExtAffineWeyl::translation(const Coweight& lam) {
    ExtAffineWeyl e;
    for (const auto& row : lam.lam) {
        e.perm.push_back(perm_identity(static_cast<int>(row.size())));
        e.shift.push_back(row);
    }
    return e;
}

ExtAffineWeyl ExtAffineWeyl::reflection(const GaugeData& g, int i, int a) {
    ExtAffineWeyl e = identity(g);
    e.perm[i] = perm_adjacent(g.v[i], a);
    return e;
}

ExtAffineWeyl ExtAffineWeyl::permutation(const GaugeData& g, int i, Perm p) {
    if (static_cast<int>(p.size()) != g.v[i])
        throw std::invalid_argument("permutation: size mismatch");
    ExtAffineWeyl e = identity(g);
    e.perm[i] = std::move(p);
    return e;
}

bool ExtAffineWeyl::is_identity() const {
    if (!perm_trivial()) return false;
    for (const auto& row : shift)
        for (int x : row)
            if (x != 0) return false;
    return true;
}

bool ExtAffineWeyl::perm_trivial() const {
    for (const auto& p : perm)
        if (!perm_is_identity(p)) return false;
    return true;
}

int ExtAffineWeyl::sign() const {
    int s = 1;
    for (const auto& p : perm) s *= perm_sign(p);
    return s;
}

ExtAffineWeyl ExtAffineWeyl::operator*(const ExtAffineWeyl& o) const {
    if (perm.size() != o.perm.size()) throw std::invalid_argument("weyl: size mismatch");
    ExtAffineWeyl out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.perm.push_back(perm_mul(perm[i], o.perm[i]));
        // (lambda1 + sigma1.lambda2)_t = lambda1_t + lambda2_{sigma1^{-1}(t)}
        Perm inv = perm_inverse(perm[i]);
        std::vector<int> row(shift[i].size());
        for (std::size_t t = 0; t < row.size(); ++t) row[t] = shift[i][t] + o.shift[i][inv[t]];
        out.shift.push_back(std::move(row));
    }
    return out;
}

ExtAffineWeyl ExtAffineWeyl::inverse() const {
    ExtAffineWeyl out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.perm.push_back(perm_inverse(perm[i]));
        std::vector<int> row(shift[i].size());
        for (std::size_t t = 0; t < row.size(); ++t) row[t] = -shift[i][perm[i][t]];
        out.shift.push_back(std::move(row));
    }
    return out;
}

std::pair<VarId, int> ExtAffineWeyl::act_var(VarId v) const {
    if (v.kind != VarId::Kind::Gauge) return {v, 0};
    int i = v.a, r = v.b;
    int s = perm[i][r];
    return {VarId::gauge(i, s), shift[i][s]};
}

MultiPoly ExtAffineWeyl::act(const MultiPoly& f) const {
    std::map<VarId, MultiPoly> images;
    for (const auto& [mono, coeff] : f.terms()) {
        (void)coeff;
        for (const auto& [var, exp] : mono) {
            (void)exp;
            if (var.kind != VarId::Kind::Gauge || images.count(var)) continue;
            auto [img, mult] = act_var(var);
            MultiPoly p = MultiPoly::variable(img);
            if (mult != 0) p += MultiPoly::constant(mult) * MultiPoly::variable(VarId::loop());
            images.emplace(var, std::move(p));
        }
    }
    return f.substitute(images);
}

LocRat ExtAffineWeyl::act(const LocRat& f) const {
    MultiPoly num = act(f.num());
    std::map<LinForm, int> den;
    int sign = 1;
    for (const auto& [form, mult] : f.den()) {
        auto [a, sa] = act_var(form.x);
        auto [b, sb] = act_var(form.y);
        int flip = 1;
        LinForm g = LinForm::canonical(a, b, form.c - sa + sb, &flip);
        den[g] += mult;
        if (mult % 2 != 0) sign *= flip;
    }
    if (sign < 0) num = -num;
    return LocRat(std::move(num), std::move(den));
}

Coweight ExtAffineWeyl::act_point(const Coweight& eta) const {
    Coweight out = eta;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        Perm inv = perm_inverse(perm[i]);
        for (std::size_t r = 0; r < eta.lam[i].size(); ++r)
            out.lam[i][r] = eta.lam[i][inv[r]] - shift[i][r];
    }
    return out;
}

std::string ExtAffineWeyl::perm_string() const {
    std::string s;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) s += '|';
        s += perm_to_string(perm[i]);
    }
    return s;
}

std::string ExtAffineWeyl::shift_string() const {
    return Coweight{shift}.to_string();
}

}  // namespace coulomb
