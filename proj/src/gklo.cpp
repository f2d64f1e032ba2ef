#include "coulomb/gklo.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "coulomb/linalg.hpp"

namespace coulomb {

namespace {

Scalar parity(int k) { return k % 2 == 0 ? Scalar(1) : Scalar(-1); }

int out_weight(const GaugeData& g, int i) {
    int total = 0;
    for (int j : g.quiver.out(i)) total += g.v[j];
    return total;
}

MultiPoly half_h(int sign) {
    MultiPoly p = MultiPoly::variable(VarId::loop());
    p.mul_scalar(scalar_of(sign, 2));
    return p;
}

MultiPoly unit_phi(const GaugeData& g, int sign, int i, int r) {
    AbelianClass c = r_unit(g, sign, i, r);
    return c.realization.terms().begin()->second.num();
}

struct MonopoleShape {
    bool zero = false;
    int i = -1;
    int sign = 0;
};

MonopoleShape monopole_shape(const GaugeData& g, const Coweight& lam) {
    if (lam.is_zero()) return {true, -1, 0};
    MonopoleShape sh;
    for (int i = 0; i < g.nvertices(); ++i) {
        bool nonzero = false;
        for (int x : lam.lam[i]) nonzero = nonzero || x != 0;
        if (!nonzero) continue;
        if (sh.i != -1) throw std::invalid_argument("unsupported monopole coweight");
        sh.i = i;
        const auto& row = lam.lam[i];
        if (row == Coweight::unit(g, i, 0, 1).lam[i])
            sh.sign = 1;
        else if (row == Coweight::unit(g, i, g.v[i] - 1, -1).lam[i])
            sh.sign = -1;
        else
            throw std::invalid_argument("unsupported monopole coweight");
    }
    return sh;
}

/// Weyl sum over the orbit of lam (a dominant unit coweight) with the
/// documented prefactor.
SmashElement weyl_sum(const GaugeData& g, int i, int sign, const MultiPoly& f) {
    const int v = g.v[i];
    const int base = sign > 0 ? 0 : v - 1;
    const Scalar pref = parity(sign > 0 ? out_weight(g, i) : v + 1);
    SmashElement out = SmashElement::zero(g);
    for (int r = 0; r < v; ++r) {
        Perm tau = perm_identity(v);
        std::swap(tau[base], tau[r]);
        MultiPoly fr = ExtAffineWeyl::permutation(g, i, tau).act(f);
        LocRat c(fr * unit_phi(g, sign, i, r));
        for (int s = 0; s < v; ++s)
            if (s != r) c = c.div_by_form(VarId::gauge(i, r), VarId::gauge(i, s), Scalar(0));
        c.mul_scalar(pref);
        out.add_term(ExtAffineWeyl::translation(Coweight::unit(g, i, r, sign)), c);
    }
    return out;
}

/// Polynomials g_p with sum_p g_p * (w_r)^p = delta_{r,r0} * prod_{s != r0}
/// (w_{r0} - w_s), solved over a monomial ansatz of growing degree.
std::vector<MultiPoly> lagrange_dressings(const std::vector<VarId>& vars, int r0,
                                          int degree_bound) {
    const int v = static_cast<int>(vars.size());
    MultiPoly target = MultiPoly::constant(1);
    for (int s = 0; s < v; ++s)
        if (s != r0)
            target *= MultiPoly::variable(vars[r0]) - MultiPoly::variable(vars[s]);
    for (int d = 0; d <= degree_bound; ++d) {
        std::vector<Monomial> basis = monomials_up_to(vars, d);
        const std::size_t ncols = static_cast<std::size_t>(v) * basis.size();
        std::vector<std::vector<Scalar>> a;
        std::vector<Scalar> b;
        for (int r = 0; r < v; ++r) {
            std::vector<MultiPoly> cols;
            MultiPoly wrp = MultiPoly::constant(1);
            for (int p = 0; p < v; ++p) {
                for (const Monomial& m : basis) {
                    MultiPoly mono;
                    mono.add_term(m, Scalar(1));
                    cols.push_back(mono * wrp);
                }
                wrp *= MultiPoly::variable(vars[r]);
            }
            MultiPoly rhs = r == r0 ? target : MultiPoly();
            std::map<Monomial, std::size_t, MonomialLess> row_of;
            for (const auto& c : cols)
                for (const auto& [m, s] : c.terms()) row_of.emplace(m, row_of.size());
            for (const auto& [m, s] : rhs.terms()) row_of.emplace(m, row_of.size());
            const std::size_t at = a.size();
            a.resize(at + row_of.size(), std::vector<Scalar>(ncols, Scalar(0)));
            b.resize(at + row_of.size(), Scalar(0));
            for (std::size_t k = 0; k < cols.size(); ++k)
                for (const auto& [m, s] : cols[k].terms()) a[at + row_of.at(m)][k] = s;
            for (const auto& [m, s] : rhs.terms()) b[at + row_of.at(m)] = s;
        }
        auto sol = solve_linear(a, b);
        if (!sol) continue;
        std::vector<MultiPoly> gp(v);
        for (int p = 0; p < v; ++p)
            for (std::size_t k = 0; k < basis.size(); ++k)
                gp[p].add_term(basis[k], (*sol)[static_cast<std::size_t>(p) * basis.size() + k]);
        return gp;
    }
    throw std::runtime_error("increase dressing degree");
}

/// Per-term factor (w[i,r] + hsign*h/2)^eta at the moving slot r of vertex i.
SmashElement with_slot_factor(const SmashElement& a, int i, int eta, int hsign) {
    SmashElement out(a.data());
    for (const auto& [grp, c] : a.terms()) {
        if (eta == 0) {
            out.add_term(grp, c);
            continue;
        }
        Coweight t = grp.translation_part();
        int slot = -1;
        for (std::size_t r = 0; r < t.lam[i].size(); ++r)
            if (t.lam[i][r] != 0) slot = static_cast<int>(r);
        MultiPoly fac = MultiPoly::variable(VarId::gauge(i, slot)) + half_h(hsign);
        out.add_term(grp, c * LocRat(fac.pow(eta)));
    }
    return out;
}

}  // namespace

std::string YangianGenerator::to_string() const {
    const char* t = tag == GenTag::A ? "A" : tag == GenTag::E ? "E" : "F";
    return std::string(t) + "(" + std::to_string(i + 1) + "," + std::to_string(p) + ")";
}

SmashElement image(const GaugeData& g, const YangianGenerator& gen) {
    if (gen.i < 0 || gen.i >= g.nvertices() || gen.p < 1)
        throw std::invalid_argument("generator index out of range");
    const int i = gen.i, p = gen.p, v = g.v[i];
    if (gen.tag == GenTag::A) {
        if (p > v) throw std::invalid_argument("generator index out of range");
        std::vector<VarId> vars;
        for (int r = 0; r < v; ++r) vars.push_back(VarId::gauge(i, r));
        MultiPoly ep = elementary_symmetric(vars, p);
        ep.mul_scalar(parity(p));
        return SmashElement::poly(g, ep);
    }
    if (v == 0) return SmashElement::zero(g);
    if (p == 1) {
        const int sign = gen.tag == GenTag::F ? 1 : -1;
        SmashElement out = SmashElement::zero(g);
        for (int r = 0; r < v; ++r) {
            LocRat c(unit_phi(g, sign, i, r));
            for (int s = 0; s < v; ++s)
                if (s != r) c = c.div_by_form(VarId::gauge(i, r), VarId::gauge(i, s), Scalar(0));
            if (sign < 0) c.mul_scalar(Scalar(-1));
            out.add_term(ExtAffineWeyl::translation(Coweight::unit(g, i, r, sign)), c);
        }
        return out;
    }
    MonopoleSpec spec;
    SmashElement m(g);
    if (gen.tag == GenTag::F) {
        spec.lam = Coweight::unit(g, i, 0, 1);
        spec.f = MultiPoly::variable(VarId::gauge(i, 0)).pow(p - 1);
        m = dressed_monopole(g, spec);
        m.mul_scalar(parity(out_weight(g, i)));
    } else {
        spec.lam = Coweight::unit(g, i, v - 1, -1);
        spec.f = MultiPoly::variable(VarId::gauge(i, v - 1)).pow(p - 1);
        m = dressed_monopole(g, spec);
        m.mul_scalar(parity(v));
    }
    return m;
}

void validate_monopole_spec(const GaugeData& g, const MonopoleSpec& spec) {
    monopole_shape(g, spec.lam);
    MinusculeData md = minuscule_data(g, spec.lam);
    for (const auto& [j, a] : md.stabilizer_gens)
        if (ExtAffineWeyl::reflection(g, j, a).act(spec.f) != spec.f)
            throw std::invalid_argument("dressing not invariant");
}

SmashElement dressed_monopole(const GaugeData& g, const MonopoleSpec& spec) {
    validate_monopole_spec(g, spec);
    MonopoleShape sh = monopole_shape(g, spec.lam);
    if (sh.zero) return SmashElement::poly(g, spec.f);
    return weyl_sum(g, sh.i, sh.sign, spec.f);
}

SmashElement iwahori_monopole(const GaugeData& g, const MonopoleSpec& spec) {
    validate_monopole_spec(g, spec);
    MinusculeData md = minuscule_data(g, spec.lam);
    return demazure(g, md.w0wl_word) * SmashElement::poly(g, spec.f) *
           r_general(g, spec.lam).realization * symmetrizer(g);
}

CrosscheckReport crosscheck_spherical(const GaugeData& g, const MonopoleSpec& spec,
                                      const std::vector<MultiPoly>& test_polys) {
    for (const MultiPoly& p : test_polys)
        for (int i = 0; i < g.nvertices(); ++i)
            for (int a = 0; a + 1 < g.v[i]; ++a)
                if (ExtAffineWeyl::reflection(g, i, a).act(p) != p)
                    throw std::invalid_argument("test polynomial not invariant");
    SmashElement e = symmetrizer(g);
    SmashElement lhs = e * iwahori_monopole(g, spec) * e;
    SmashElement rhs = dressed_monopole(g, spec);
    CrosscheckReport rep;
    rep.pass = true;
    int sign = 0;
    for (const MultiPoly& p : test_polys) {
        LocRat l = lhs.act_on_function(LocRat(p));
        LocRat r = rhs.act_on_function(LocRat(p));
        if (l.is_zero() && r.is_zero()) continue;
        int s = 0;
        if (l == r) {
            s = 1;
        } else {
            LocRat neg = r;
            neg.mul_scalar(Scalar(-1));
            if (l == neg) s = -1;
        }
        if (s == 0 || (sign != 0 && s != sign)) {
            rep.pass = false;
            rep.mismatches.push_back(p.to_string());
            continue;
        }
        sign = s;
    }
    rep.sign = sign == 0 ? 1 : sign;
    return rep;
}

MonopoleDecomposition abelian_from_monopoles(const GaugeData& g, const Coweight& mu,
                                             int degree_bound) {
    int vi = -1, r0 = -1, sign = 0;
    for (int i = 0; i < g.nvertices(); ++i)
        for (int r = 0; r < g.v[i]; ++r) {
            int x = mu.at(i, r);
            if (x == 0) continue;
            if (vi != -1 || (x != 1 && x != -1))
                throw std::invalid_argument("unsupported monopole coweight");
            vi = i;
            r0 = r;
            sign = x;
        }
    if (vi == -1) throw std::invalid_argument("unsupported monopole coweight");
    const int v = g.v[vi];
    const int base = sign > 0 ? 0 : v - 1;

    MonopoleDecomposition out;
    out.lam = sign > 0 ? Coweight::unit(g, vi, 0, 1) : Coweight::unit(g, vi, v - 1, -1);

    std::vector<VarId> vars;
    for (int r = 0; r < v; ++r) vars.push_back(VarId::gauge(vi, r));
    std::vector<MultiPoly> gp = lagrange_dressings(vars, r0, degree_bound);

    DualBases db = dual_bases(g);
    SmashElement e = symmetrizer(g);
    SmashElement dw0 = demazure(g, longest_word(g));
    ExtAffineWeyl tmu = ExtAffineWeyl::translation(mu);
    ExtAffineWeyl tmu_inv = tmu.inverse();

    std::vector<SmashElement> edressed;
    std::vector<MultiPoly> fs;
    MultiPoly fp = MultiPoly::constant(1);
    for (int p = 0; p < v; ++p) {
        MonopoleSpec spec{out.lam, fp};
        edressed.push_back(e * dressed_monopole(g, spec) * e * dw0);
        fs.push_back(fp);
        fp *= MultiPoly::variable(vars[base]);
    }

    SmashElement rhs = SmashElement::zero(g);
    for (std::size_t t = 0; t < db.x.size(); ++t)
        for (int p = 0; p < v; ++p) {
            MultiPoly x = db.x[t] * tmu_inv.act(gp[p]);
            out.terms.push_back({x, fs[p], db.y[t]});
            rhs += SmashElement::poly(g, tmu.act(x)) * edressed[p] *
                   SmashElement::poly(g, db.y[t]);
        }

    SmashElement target = r_general(g, mu).realization;
    if (rhs == target) {
        out.sign = 1;
    } else {
        SmashElement neg = rhs;
        neg.mul_scalar(Scalar(-1));
        if (neg != target) throw std::logic_error("monopole reassembly failed");
        out.sign = -1;
        for (auto& term : out.terms) term.x.mul_scalar(Scalar(-1));
        rhs = neg;
    }
    out.reassembled = rhs;
    return out;
}

CheckReport verify_relations(const GaugeData& g) {
    CheckReport rep;
    auto record = [&rep](const std::string& name, bool ok) {
        rep.lines.push_back(name + (ok ? " PASS" : " FAIL"));
        rep.pass = rep.pass && ok;
    };
    const int n = g.nvertices();
    std::vector<SmashElement> eimg, fimg;
    for (int i = 0; i < n; ++i) {
        eimg.push_back(image(g, {GenTag::E, i, 1}));
        fimg.push_back(image(g, {GenTag::F, i, 1}));
    }
    std::vector<SmashElement> aimg;
    for (int i = 0; i < n; ++i)
        for (int p = 1; p <= g.v[i]; ++p) aimg.push_back(image(g, {GenTag::A, i, p}));

    bool ok = true;
    for (std::size_t s = 0; s < aimg.size(); ++s)
        for (std::size_t t = s; t < aimg.size(); ++t)
            ok = ok && commutator(aimg[s], aimg[t]).is_zero();
    record("commutator-AA", ok);

    ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) ok = ok && commutator(eimg[i], fimg[j]).is_zero();
    record("commutator-EF-cross", ok);

    ok = true;
    for (int i = 0; i < n; ++i) {
        if (g.v[i] == 0) continue;
        SmashElement c = commutator(eimg[i], fimg[i]);
        auto fc = c.as_coeff();
        ok = ok && fc.has_value() && c.div_h().has_value();
        if (fc)
            for (int j = 0; j < n; ++j)
                for (int a = 0; a + 1 < g.v[j]; ++a)
                    ok = ok && ExtAffineWeyl::reflection(g, j, a).act(*fc) == *fc;
    }
    record("commutator-EF-diagonal", ok);

    ok = true;
    for (int i = 0; i < n; ++i) {
        if (g.v[i] == 0) continue;
        std::vector<int> we(n, 0), wf(n, 0);
        we[i] = -1;
        wf[i] = 1;
        ok = ok && eimg[i].weight() == std::optional(we);
        ok = ok && fimg[i].weight() == std::optional(wf);
        for (int j = 0; j < n; ++j) {
            if (g.v[j] == 0) continue;
            SmashElement prod = eimg[i] * fimg[j];
            if (prod.is_zero()) continue;
            std::vector<int> sum(n, 0);
            sum[i] -= 1;
            sum[j] += 1;
            ok = ok && prod.weight() == std::optional(sum);
        }
    }
    record("weights", ok);

    ok = true;
    for (const SmashElement& a : aimg) ok = ok && a.degree().has_value();
    for (int i = 0; i < n; ++i) {
        if (g.v[i] == 0) continue;
        for (int p = 1; p <= std::min(g.v[i] + 1, 3); ++p) {
            ok = ok && image(g, {GenTag::E, i, p}).degree().has_value();
            ok = ok && image(g, {GenTag::F, i, p}).degree().has_value();
        }
    }
    record("homogeneity", ok);
    return rep;
}

MultiPoly USeries::at(int k) const {
    auto it = coeff.find(k);
    return it == coeff.end() ? MultiPoly() : it->second;
}

std::string USeries::to_string() const {
    if (coeff.empty()) return "0";
    std::string out;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.to_string() + ") * u^" + std::to_string(it->first);
    }
    return out;
}

USeries h_series(const GaugeData& g, int i, int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    if (i < 0 || i >= g.nvertices()) throw std::invalid_argument("generator index out of range");
    std::vector<MultiPoly> num_roots, den_roots;
    for (int k : g.flavours_at(i)) num_roots.push_back(g.flavour_poly(k));
    for (int c = 0; c < g.coframing[i]; ++c) num_roots.push_back(MultiPoly());
    for (int j = 0; j < g.nvertices(); ++j)
        if (g.quiver.adjacent(i, j))
            for (int s = 0; s < g.v[j]; ++s)
                num_roots.push_back(MultiPoly::variable(VarId::gauge(j, s)) + half_h(1));
    MultiPoly h = MultiPoly::variable(VarId::loop());
    for (int r = 0; r < g.v[i]; ++r) {
        den_roots.push_back(MultiPoly::variable(VarId::gauge(i, r)));
        den_roots.push_back(MultiPoly::variable(VarId::gauge(i, r)) + h);
    }
    const int d = static_cast<int>(num_roots.size()) - static_cast<int>(den_roots.size());
    USeries out;
    out.order = order;
    const int nterms = order + d;
    if (nterms < 0) return out;
    std::vector<MultiPoly> f(nterms + 1);
    f[0] = MultiPoly::constant(1);
    for (const MultiPoly& a : num_roots)
        for (int t = nterms; t >= 1; --t) f[t] -= a * f[t - 1];
    for (const MultiPoly& b : den_roots)
        for (int t = 1; t <= nterms; ++t) f[t] += b * f[t - 1];
    for (int t = 0; t <= nterms; ++t) out.coeff.emplace(d - t, f[t]);
    return out;
}

CheckReport shift_check(const GaugeData& g, const std::vector<int>& eta) {
    if (static_cast<int>(eta.size()) != g.nvertices())
        throw std::invalid_argument("bad shift coweight");
    for (int x : eta)
        if (x < 0) throw std::invalid_argument("bad shift coweight");
    CheckReport rep;
    auto record = [&rep](const std::string& name, bool ok) {
        rep.lines.push_back(name + (ok ? " PASS" : " FAIL"));
        rep.pass = rep.pass && ok;
    };

    std::vector<int> w2 = g.w, seq2 = g.flavour_seq, cof2 = g.coframing;
    auto val2 = g.flavour_values;
    for (int i = 0; i < g.nvertices(); ++i)
        for (int t = 0; t < eta[i]; ++t) {
            ++w2[i];
            seq2.push_back(i);
            val2.push_back(Scalar(0));
        }
    GaugeData gf = GaugeData::make(g.quiver, g.v, w2, seq2, val2, g.coframing);
    for (int i = 0; i < g.nvertices(); ++i) cof2[i] += eta[i];
    GaugeData gc = GaugeData::make(g.quiver, g.v, g.w, g.flavour_seq, g.flavour_values, cof2);

    for (int i = 0; i < g.nvertices(); ++i) {
        for (int p = 1; p <= std::min(g.v[i], 2); ++p) {
            YangianGenerator ge{GenTag::E, i, p}, gfgen{GenTag::F, i, p};
            SmashElement eOld = image(g, ge), fOld = image(g, gfgen);
            record("framing " + gfgen.to_string(), image(gf, gfgen) == fOld);
            record("framing " + ge.to_string(),
                   image(gf, ge) == with_slot_factor(eOld, i, eta[i], -1));
            record("coframing " + ge.to_string(), image(gc, ge) == eOld);
            record("coframing " + gfgen.to_string(),
                   image(gc, gfgen) == with_slot_factor(fOld, i, eta[i], 1));
        }
        for (int p = 1; p <= g.v[i]; ++p) {
            YangianGenerator ga{GenTag::A, i, p};
            SmashElement aOld = image(g, ga);
            record("framing " + ga.to_string(), image(gf, ga) == aOld);
            record("coframing " + ga.to_string(), image(gc, ga) == aOld);
        }
    }
    return rep;
}

SmashElement poisson_bracket(const SmashElement& a, const SmashElement& b) {
    SmashElement c = commutator(a, b);
    auto d = c.div_h();
    if (!d) throw std::logic_error("commutator not h-divisible");
    SmashElement out(a.data());
    for (const auto& [grp, f] : d->terms()) out.add_term(grp, f.at_h_zero());
    return out;
}

}  // namespace coulomb
