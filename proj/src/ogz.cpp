#include "coulomb/ogz.hpp"

#include <algorithm>
#include <stdexcept>

#include "coulomb/gklo.hpp"

namespace coulomb {

namespace {

std::vector<std::pair<int, int>> chain_arrows(int m, bool reoriented) {
    std::vector<std::pair<int, int>> arrows;
    for (int a = 0; a + 1 < m; ++a) {
        if (reoriented)
            arrows.emplace_back(a, a + 1);
        else
            arrows.emplace_back(a + 1, a);
    }
    return arrows;
}

void check_row(const OgzData& d, int i, int k) {
    if (i < 1 || i > d.n) throw std::invalid_argument("row index out of range");
    if (k < 1 || k > d.r[i - 1]) throw std::invalid_argument("row slot out of range");
}

MultiPoly half_loop(long num, long den) {
    MultiPoly p;
    p.add_term({{VarId::loop(), 1}}, scalar_of(num, den));
    return p;
}

}  // namespace

OgzData OgzData::make(const std::vector<int>& r, bool reoriented) {
    int n = static_cast<int>(r.size());
    if (n < 2) throw std::invalid_argument("need at least two rows");
    for (int ri : r)
        if (ri < 0) throw std::invalid_argument("negative row size");
    int m = n - 1;
    Quiver q = Quiver::make(m, chain_arrows(m, reoriented));
    std::vector<int> v(r.begin(), r.end() - 1);
    std::vector<int> w(m, 0);
    std::vector<int> seq;
    std::vector<int> cofr;
    if (reoriented) {
        cofr.assign(m, 0);
        cofr[m - 1] = r[n - 1];
    } else {
        w[m - 1] = r[n - 1];
        seq.assign(r[n - 1], m - 1);
    }
    OgzData d;
    d.n = n;
    d.r = r;
    d.reoriented = reoriented;
    d.gauge = GaugeData::make(std::move(q), std::move(v), std::move(w), std::move(seq), {},
                              std::move(cofr));
    return d;
}

OgzData OgzData::from_gauge(const GaugeData& g) {
    int m = g.nvertices();
    if (m < 1) throw std::invalid_argument("not a chain gauge theory");
    GaugeData gs = g;
    std::sort(gs.quiver.arrows.begin(), gs.quiver.arrows.end());
    for (bool reoriented : {false, true}) {
        std::vector<int> r = g.v;
        r.push_back(reoriented ? g.coframing[m - 1] : g.w[m - 1]);
        OgzData d = make(r, reoriented);
        if (!(d.gauge == gs)) continue;
        return d;
    }
    throw std::invalid_argument("not a chain gauge theory");
}

MultiPoly ogz_x(const OgzData& d, int i, int k) {
    check_row(d, i, k);
    long hnum = d.reoriented ? i : -i;
    if (i == d.n) {
        MultiPoly top = half_loop(hnum, 2);
        if (!d.reoriented) top = top - d.gauge.flavour_poly(k - 1);
        return top;
    }
    MultiPoly p = half_loop(hnum, 2);
    p.add_term({{VarId::gauge(i - 1, k - 1), 1}}, Scalar(-1));
    return p;
}

SmashElement ogz_phi(const OgzData& d, int i, int k, int power) {
    if (i == d.n) throw std::invalid_argument("top row carries no shifts");
    check_row(d, i, k);
    return SmashElement::shift_u(d.gauge, i - 1, k - 1, -power);
}

OgzPair ogz_generators(const OgzData& d, int i) {
    if (i < 1 || i > d.n - 1) throw std::invalid_argument("row index out of range");
    const GaugeData& g = d.gauge;
    OgzPair out{SmashElement::zero(g), SmashElement::zero(g)};
    int ri = d.r[i - 1];
    int up_count = d.r[i];
    int down_count = i >= 2 ? d.r[i - 2] : 0;
    for (int k = 1; k <= ri; ++k) {
        MultiPoly xk = ogz_x(d, i, k);
        MultiPoly up = MultiPoly::constant(1);
        for (int l = 1; l <= up_count; ++l) up = up * (ogz_x(d, i + 1, l) - xk);
        MultiPoly down = MultiPoly::constant(1);
        for (int l = 1; l <= down_count; ++l) down = down * (ogz_x(d, i - 1, l) - xk);
        LocRat cup(up), cdown(down);
        for (int l = 1; l <= ri; ++l) {
            if (l == k) continue;
            // divide by x_{i,l} - x_{i,k} = w[i,k] - w[i,l]
            cup = cup.div_by_form(VarId::gauge(i - 1, k - 1), VarId::gauge(i - 1, l - 1), Scalar(0));
            cdown =
                cdown.div_by_form(VarId::gauge(i - 1, k - 1), VarId::gauge(i - 1, l - 1), Scalar(0));
        }
        if (d.reoriented) {
            out.plus += SmashElement::group(g, ExtAffineWeyl::translation(
                                                   Coweight::unit(g, i - 1, k - 1, -1))) *
                        SmashElement::coeff(g, cup);
            out.minus -= SmashElement::group(g, ExtAffineWeyl::translation(
                                                    Coweight::unit(g, i - 1, k - 1, 1))) *
                         SmashElement::coeff(g, cdown);
        } else {
            out.plus -= SmashElement::term(
                g, cup, ExtAffineWeyl::translation(Coweight::unit(g, i - 1, k - 1, -1)));
            out.minus += SmashElement::term(
                g, cdown, ExtAffineWeyl::translation(Coweight::unit(g, i - 1, k - 1, 1)));
        }
    }
    return out;
}

OgzCompareReport compare_with_yangian(const OgzData& d) {
    OgzCompareReport rep;
    rep.pass = true;
    for (int i = 1; i <= d.n - 1; ++i) {
        OgzPair x = ogz_generators(d, i);
        SmashElement ref_plus = image(d.gauge, {GenTag::E, i - 1, 1});
        SmashElement ref_minus = image(d.gauge, {GenTag::F, i - 1, 1});
        if (d.reoriented) {
            std::swap(ref_plus, ref_minus);
            ref_plus = antiinvolution_transport(ref_plus);
            ref_minus = antiinvolution_transport(ref_minus);
        }
        auto record = [&](const SmashElement& lhs, const SmashElement& rhs) -> int {
            if (lhs == rhs) return 1;
            if (lhs == -rhs) return -1;
            rep.pass = false;
            return 0;
        };
        rep.plus_sign.push_back(record(x.plus, ref_plus));
        rep.minus_sign.push_back(record(x.minus, ref_minus));
        rep.lines.push_back("i=" + std::to_string(i) +
                            " plus_sign=" + std::to_string(rep.plus_sign.back()) +
                            " minus_sign=" + std::to_string(rep.minus_sign.back()));
    }
    return rep;
}

SmashElement antiinvolution_transport(const SmashElement& a) {
    SmashElement out(a.data());
    for (const auto& [g, f] : a.terms()) {
        if (!g.perm_trivial())
            throw std::invalid_argument("transport requires translation-only terms");
        ExtAffineWeyl ginv = g.inverse();
        out.add_term(ginv, ginv.act(f));
    }
    return out;
}

std::vector<std::pair<ExtAffineWeyl, LocRat>> left_terms(const SmashElement& a) {
    std::vector<std::pair<ExtAffineWeyl, LocRat>> out;
    for (const auto& [g, f] : a.terms()) out.emplace_back(g, g.inverse().act(f));
    return out;
}

std::string serialize_left(const SmashElement& a, HMode mode) {
    auto terms = left_terms(a);
    if (terms.empty()) return "0";
    auto poly_string = [&](const MultiPoly& p) -> std::string {
        if (mode == HMode::Symbolic) return p.to_string();
        std::map<VarId, MultiPoly> h_one{{VarId::loop(), MultiPoly::constant(1)}};
        return p.substitute(h_one).to_string();
    };
    std::string s;
    bool first = true;
    for (const auto& [g, f] : terms) {
        if (!first) s += " + ";
        first = false;
        s += "s[" + g.perm_string() + "] * u[" + g.shift_string() + "] * ";
        s += "(" + poly_string(f.num()) + ")";
        if (!f.den().empty()) {
            s += " / (";
            bool fst = true;
            for (const auto& [form, mult] : f.den()) {
                if (!fst) s += " * ";
                fst = false;
                s += "(" + poly_string(form.to_poly()) + ")";
                if (mult != 1) s += "^" + std::to_string(mult);
            }
            s += ")";
        }
    }
    return s;
}

SmashElement permute_flavours(const SmashElement& a, const Perm& p) {
    const GaugeData& g = a.data();
    if (static_cast<int>(p.size()) != g.nflavours())
        throw std::invalid_argument("flavour permutation size mismatch");
    std::map<VarId, MultiPoly> images;
    for (int k = 0; k < g.nflavours(); ++k) {
        MultiPoly zk;
        zk.add_term({{VarId::flavour(p[k]), 1}}, Scalar(1));
        images.emplace(VarId::flavour(k), std::move(zk));
    }
    SmashElement out(g);
    for (const auto& [w, f] : a.terms())
        out.add_term(w, LocRat(f.num().substitute(images), f.den()));
    return out;
}

SmashElement symmetrize_flavours(const SmashElement& a) {
    int nf = a.data().nflavours();
    SmashElement out = SmashElement::zero(a.data());
    long count = 0;
    for (const Perm& p : all_perms(nf)) {
        out += permute_flavours(a, p);
        ++count;
    }
    out.mul_scalar(scalar_of(1, count));
    return out;
}

bool flavour_symmetric(const SmashElement& a) {
    int nf = a.data().nflavours();
    for (int k = 0; k + 1 < nf; ++k)
        if (!(permute_flavours(a, perm_adjacent(nf, k)) == a)) return false;
    return true;
}

}  // namespace coulomb
