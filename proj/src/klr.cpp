#include "coulomb/klr.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace coulomb {

namespace {

// Strand at one position: diagram-bottom slot plus accumulated winding, so its
// lift sits at (position + 1)/(m + 1) + wind.
struct Strand {
    int vertex = 0;
    int slot = 0;
    int wind = 0;
};

std::vector<Strand> start_state(const std::vector<int>& bot) {
    std::vector<Strand> st;
    st.reserve(bot.size());
    for (const auto& [i, r] : sequence_slots(bot)) st.push_back({i, r, 0});
    return st;
}

void advance(std::vector<Strand>& st, const Slice& s) {
    int m = static_cast<int>(st.size());
    switch (s.kind) {
        case Slice::Kind::E:
        case Slice::Kind::Dot:
            break;
        case Slice::Kind::Psi:
            std::swap(st[s.k], st[s.k + 1]);
            break;
        case Slice::Kind::SigmaPlus: {
            Strand wrapped = st[m - 1];
            wrapped.wind += 1;
            for (int p = m - 1; p > 0; --p) st[p] = st[p - 1];
            st[0] = wrapped;
            break;
        }
        case Slice::Kind::SigmaMinus: {
            Strand wrapped = st[0];
            wrapped.wind -= 1;
            for (int p = 0; p + 1 < m; ++p) st[p] = st[p + 1];
            st[m - 1] = wrapped;
            break;
        }
    }
}

bool has_framing_wall(const GaugeData& g, int i) { return g.w[i] + g.coframing[i] > 0; }

// Crossing of the strands at positions k, k+1; the left lift increases, the
// right one decreases, so their difference passes the winding gap exactly once.
std::optional<CrossingEvent> psi_event(const GaugeData& g, const std::vector<Strand>& st, int k) {
    const Strand& a = st[k];
    const Strand& b = st[k + 1];
    CrossingEvent ev;
    if (a.vertex == b.vertex) {
        ev.kind = CrossingEvent::Kind::Root;
        ev.i = a.vertex;
        ev.r = a.slot;
        ev.j = b.vertex;
        ev.s = b.slot;
        ev.n = a.wind - b.wind;
        ev.dir = 1;
        return ev;
    }
    if (g.quiver.has_arrow(a.vertex, b.vertex)) {
        ev.kind = CrossingEvent::Kind::Arrow;
        ev.i = a.vertex;
        ev.r = a.slot;
        ev.j = b.vertex;
        ev.s = b.slot;
        ev.n = a.wind - b.wind;
        ev.dir = 1;
        return ev;
    }
    if (g.quiver.has_arrow(b.vertex, a.vertex)) {
        ev.kind = CrossingEvent::Kind::Arrow;
        ev.i = b.vertex;
        ev.r = b.slot;
        ev.j = a.vertex;
        ev.s = a.slot;
        ev.n = b.wind - a.wind;
        ev.dir = -1;
        return ev;
    }
    return std::nullopt;
}

// Seam crossing of the wrapped strand: one framing wall when the vertex
// carries framing or coframing, nothing otherwise.
std::optional<CrossingEvent> sigma_event(const GaugeData& g, const std::vector<Strand>& st,
                                         Slice::Kind kind) {
    int m = static_cast<int>(st.size());
    const Strand& w = kind == Slice::Kind::SigmaPlus ? st[m - 1] : st[0];
    if (!has_framing_wall(g, w.vertex)) return std::nullopt;
    CrossingEvent ev;
    ev.kind = CrossingEvent::Kind::Framing;
    ev.i = w.vertex;
    ev.r = w.slot;
    if (kind == Slice::Kind::SigmaPlus) {
        ev.n = w.wind + 1;
        ev.dir = 1;
    } else {
        ev.n = w.wind;
        ev.dir = -1;
    }
    return ev;
}

MultiPoly gauge_var(int i, int r) { return MultiPoly::variable(VarId::gauge(i, r)); }

MultiPoly h_multiple(long num, long den = 1) {
    MultiPoly p;
    if (num != 0) p.add_term({{VarId::loop(), 1}}, scalar_of(num, den));
    return p;
}

SmashElement event_op(const GaugeData& g, const CrossingEvent& ev) {
    switch (ev.kind) {
        case CrossingEvent::Kind::Root: {
            // (1/alpha)(1 - t), alpha positive on the source side of the wall.
            LocRat inv(MultiPoly::constant(1));
            if (ev.dir > 0)
                inv = inv.div_by_form(VarId::gauge(ev.i, ev.s), VarId::gauge(ev.i, ev.r),
                                      Scalar(-ev.n));
            else
                inv = inv.div_by_form(VarId::gauge(ev.i, ev.r), VarId::gauge(ev.i, ev.s),
                                      Scalar(ev.n));
            ExtAffineWeyl t = ExtAffineWeyl::identity(g);
            t.perm[ev.i][ev.r] = ev.s;
            t.perm[ev.i][ev.s] = ev.r;
            t.shift[ev.i][ev.r] = -ev.n;
            t.shift[ev.i][ev.s] = ev.n;
            return SmashElement::coeff(g, inv) *
                   (SmashElement::unit(g) - SmashElement::group(g, t));
        }
        case CrossingEvent::Kind::Framing: {
            if (ev.dir < 0) {
                MultiPoly f = MultiPoly::constant(1);
                for (int k : g.flavours_at(ev.i))
                    f = f * (gauge_var(ev.i, ev.r) - g.flavour_poly(k) -
                             h_multiple(2 * ev.n - 1, 2));
                return SmashElement::poly(g, f);
            }
            if (g.coframing[ev.i] == 0) return SmashElement::unit(g);
            MultiPoly f = (gauge_var(ev.i, ev.r) - h_multiple(2 * ev.n - 1, 2))
                              .pow(g.coframing[ev.i]);
            return SmashElement::poly(g, f);
        }
        case CrossingEvent::Kind::Arrow: {
            if (ev.dir < 0) return SmashElement::unit(g);
            MultiPoly f =
                gauge_var(ev.j, ev.s) - gauge_var(ev.i, ev.r) + h_multiple(2 * ev.n + 1, 2);
            return SmashElement::poly(g, f);
        }
    }
    throw std::logic_error("unreachable");
}

ExtAffineWeyl terminal_of(const GaugeData& g, const std::vector<Strand>& st,
                          const std::vector<int>& top) {
    ExtAffineWeyl w = ExtAffineWeyl::identity(g);
    std::vector<int> occ(g.nvertices(), 0);
    for (std::size_t p = 0; p < st.size(); ++p) {
        int i = top[p];
        int s = occ[i]++;
        w.perm[i][s] = st[p].slot;
        w.shift[i][st[p].slot] = -st[p].wind;
    }
    return w;
}

void check_same_data(const GaugeData& a, const GaugeData& b) {
    if (&a != &b && !(a == b)) throw std::invalid_argument("gauge data mismatch");
}

std::vector<int> strand_labels(const std::vector<Strand>& st) {
    std::vector<int> out;
    out.reserve(st.size());
    for (const Strand& s : st) out.push_back(s.vertex);
    return out;
}

}  // namespace

std::vector<int> slice_top(const Slice& s, const std::vector<int>& bot) {
    int m = static_cast<int>(bot.size());
    std::vector<int> top = bot;
    switch (s.kind) {
        case Slice::Kind::E:
            break;
        case Slice::Kind::Dot:
            if (s.k < 0 || s.k >= m) throw std::invalid_argument("dot position out of range");
            break;
        case Slice::Kind::Psi:
            if (s.k < 0 || s.k + 1 >= m)
                throw std::invalid_argument("crossing position out of range");
            std::swap(top[s.k], top[s.k + 1]);
            break;
        case Slice::Kind::SigmaPlus:
            if (m == 0) throw std::invalid_argument("seam slice needs a strand");
            std::rotate(top.begin(), top.end() - 1, top.end());
            break;
        case Slice::Kind::SigmaMinus:
            if (m == 0) throw std::invalid_argument("seam slice needs a strand");
            std::rotate(top.begin(), top.begin() + 1, top.end());
            break;
    }
    return top;
}

CylDiagram CylDiagram::make(const GaugeData& g, std::vector<int> bot, std::vector<Slice> slices) {
    std::vector<int> counts(g.nvertices(), 0);
    for (int i : bot) {
        if (i < 0 || i >= g.nvertices()) throw std::invalid_argument("bad sequence: unknown vertex");
        ++counts[i];
    }
    for (int i = 0; i < g.nvertices(); ++i)
        if (counts[i] != g.v[i])
            throw std::invalid_argument("bad sequence: counts must match v");
    CylDiagram d;
    d.g_ = &g;
    d.bot_ = std::move(bot);
    std::vector<int> cur = d.bot_;
    for (Slice& s : slices) {
        s.bot = cur;
        cur = slice_top(s, cur);
    }
    d.top_ = std::move(cur);
    d.slices_ = std::move(slices);
    return d;
}

CylDiagram parse_diagram(const GaugeData& g, const std::vector<Slice>& slices) {
    if (slices.empty()) throw std::invalid_argument("empty slice list");
    if (slices.front().bot.empty()) throw std::invalid_argument("missing bottom sequence");
    std::vector<int> cur = slices.front().bot;
    std::vector<int> bot = cur;
    for (const Slice& s : slices) {
        if (!s.bot.empty() && s.bot != cur)
            throw std::invalid_argument("label mismatch between slices");
        cur = slice_top(s, cur);
    }
    return CylDiagram::make(g, std::move(bot), slices);
}

std::string diagram_to_text(const CylDiagram& d) {
    std::ostringstream out;
    out << "objects:";
    for (int i : d.bot()) out << ' ' << i + 1;
    out << '\n';
    for (const Slice& s : d.slices()) {
        switch (s.kind) {
            case Slice::Kind::E: out << "e\n"; break;
            case Slice::Kind::Psi: out << "psi " << s.k + 1 << '\n'; break;
            case Slice::Kind::SigmaPlus: out << "sigma +\n"; break;
            case Slice::Kind::SigmaMinus: out << "sigma -\n"; break;
            case Slice::Kind::Dot: out << "dot " << s.k + 1 << '\n'; break;
        }
    }
    return out.str();
}

CylDiagram diagram_from_text(const GaugeData& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::vector<int> bot;
    std::vector<Slice> slices;
    auto fail = [&lineno](const std::string& what) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (!have_header) {
            if (word != "objects:") fail("expected objects header");
            int label = 0;
            while (ls >> label) {
                if (label < 1) fail("bad vertex label");
                bot.push_back(label - 1);
            }
            if (!ls.eof()) fail("bad vertex label");
            have_header = true;
            continue;
        }
        Slice s;
        if (word == "e") {
            s = Slice::e();
        } else if (word == "psi" || word == "dot") {
            int k = 0;
            if (!(ls >> k) || k < 1) fail("bad position");
            s = word == "psi" ? Slice::psi(k - 1) : Slice::dot(k - 1);
        } else if (word == "sigma") {
            std::string dir;
            if (!(ls >> dir) || (dir != "+" && dir != "-")) fail("bad seam direction");
            s = dir == "+" ? Slice::sigma_plus() : Slice::sigma_minus();
        } else {
            fail("unknown slice");
        }
        std::string extra;
        if (ls >> extra) fail("trailing tokens");
        slices.push_back(s);
    }
    if (!have_header) throw std::invalid_argument("missing objects header");
    return CylDiagram::make(g, std::move(bot), std::move(slices));
}

std::string CrossingEvent::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Root:
            out << "root w[" << i + 1 << ',' << r + 1 << "]-w[" << j + 1 << ',' << s + 1
                << "]=" << n;
            break;
        case Kind::Framing:
            out << "weight w[" << i + 1 << ',' << r + 1 << "]=" << n;
            break;
        case Kind::Arrow:
            out << "weight w[" << i + 1 << ',' << r + 1 << "]-w[" << j + 1 << ',' << s + 1
                << "]=" << n;
            break;
    }
    out << (dir > 0 ? " up" : " down");
    return out.str();
}

UnrolledPath unroll(const CylDiagram& d) {
    const GaugeData& g = d.data();
    std::vector<Strand> st = start_state(d.bot());
    UnrolledPath path;
    for (const Slice& s : d.slices()) {
        std::optional<CrossingEvent> ev;
        if (s.kind == Slice::Kind::Psi)
            ev = psi_event(g, st, s.k);
        else if (s.kind == Slice::Kind::SigmaPlus || s.kind == Slice::Kind::SigmaMinus)
            ev = sigma_event(g, st, s.kind);
        if (ev) path.events.push_back(*ev);
        advance(st, s);
    }
    path.terminal = terminal_of(g, st, d.top());
    return path;
}

SmashElement evaluate(const CylDiagram& d) {
    const GaugeData& g = d.data();
    std::vector<Strand> st = start_state(d.bot());
    SmashElement acc = SmashElement::unit(g);
    for (const Slice& s : d.slices()) {
        switch (s.kind) {
            case Slice::Kind::E:
                break;
            case Slice::Kind::Dot: {
                const Strand& t = st[s.k];
                acc = SmashElement::poly(g, gauge_var(t.vertex, t.slot) - h_multiple(t.wind)) *
                      acc;
                break;
            }
            case Slice::Kind::Psi: {
                if (auto ev = psi_event(g, st, s.k)) acc = event_op(g, *ev) * acc;
                break;
            }
            case Slice::Kind::SigmaPlus:
            case Slice::Kind::SigmaMinus: {
                if (auto ev = sigma_event(g, st, s.kind)) acc = event_op(g, *ev) * acc;
                break;
            }
        }
        advance(st, s);
    }
    ExtAffineWeyl terminal = terminal_of(g, st, d.top());
    return SmashElement::group(g, terminal.inverse()) * acc;
}

CylDiagram stack(const CylDiagram& d1, const CylDiagram& d2) {
    check_same_data(d1.data(), d2.data());
    if (d1.bot() != d2.top()) throw std::invalid_argument("object mismatch");
    std::vector<Slice> slices = d2.slices();
    slices.insert(slices.end(), d1.slices().begin(), d1.slices().end());
    return CylDiagram::make(d2.data(), d2.bot(), std::move(slices));
}

IsotopyReport isotopy_check(const CylDiagram& a, const CylDiagram& b) {
    check_same_data(a.data(), b.data());
    IsotopyReport rep;
    SmashElement ea = evaluate(a);
    SmashElement eb = evaluate(b);
    rep.lhs = ea.to_string();
    rep.rhs = eb.to_string();
    rep.pass = a.bot() == b.bot() && a.top() == b.top() && ea == eb;
    return rep;
}

std::vector<CylDiagram> slide_variants(const CylDiagram& d) {
    auto support = [](const Slice& s) -> std::vector<int> {
        switch (s.kind) {
            case Slice::Kind::Psi: return {s.k, s.k + 1};
            case Slice::Kind::Dot: return {s.k};
            default: return {};
        }
    };
    std::vector<CylDiagram> out;
    const std::vector<Slice>& slices = d.slices();
    for (std::size_t j = 0; j + 1 < slices.size(); ++j) {
        const Slice& s1 = slices[j];
        const Slice& s2 = slices[j + 1];
        if (s1.kind == Slice::Kind::SigmaPlus || s1.kind == Slice::Kind::SigmaMinus) continue;
        if (s2.kind == Slice::Kind::SigmaPlus || s2.kind == Slice::Kind::SigmaMinus) continue;
        std::vector<int> sup1 = support(s1);
        std::vector<int> sup2 = support(s2);
        bool disjoint = true;
        for (int x : sup1)
            for (int y : sup2)
                if (x == y) disjoint = false;
        if (!disjoint) continue;
        std::vector<Slice> swapped = slices;
        std::swap(swapped[j], swapped[j + 1]);
        out.push_back(CylDiagram::make(d.data(), d.bot(), std::move(swapped)));
    }
    return out;
}

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    return q * b > a ? q - 1 : q;
}

// Integers strictly between a/den and b/den; endpoints on a wall are refused.
int integers_between(long a, long b, long den) {
    if (a % den == 0 || b % den == 0) throw std::runtime_error("degenerate diagram");
    if (a > b) std::swap(a, b);
    return static_cast<int>(floor_div(b, den) - floor_div(a, den));
}

// Scaled slot coordinates: numerators over den = m + 1 of eta_bot and of
// w . eta_top under the point action.
struct EndPoints {
    long den = 1;
    std::vector<std::vector<long>> a, b;
};

EndPoints endpoints(const GaugeData& g, const std::vector<int>& bot, const std::vector<int>& top,
                    const ExtAffineWeyl& w) {
    if (bot.size() != top.size()) throw std::invalid_argument("object mismatch");
    EndPoints ep;
    ep.den = static_cast<long>(bot.size()) + 1;
    ep.a.resize(g.nvertices());
    ep.b.resize(g.nvertices());
    std::vector<std::vector<long>> t(g.nvertices());
    for (int i = 0; i < g.nvertices(); ++i) {
        ep.a[i].assign(g.v[i], 0);
        ep.b[i].assign(g.v[i], 0);
        t[i].assign(g.v[i], 0);
    }
    auto bslots = sequence_slots(bot);
    auto tslots = sequence_slots(top);
    for (std::size_t p = 0; p < bslots.size(); ++p)
        ep.a[bslots[p].first][bslots[p].second] = static_cast<long>(p) + 1;
    for (std::size_t p = 0; p < tslots.size(); ++p)
        t[tslots[p].first][tslots[p].second] = static_cast<long>(p) + 1;
    for (int i = 0; i < g.nvertices(); ++i) {
        Perm inv = perm_inverse(w.perm[i]);
        for (int r = 0; r < g.v[i]; ++r)
            ep.b[i][r] = t[i][inv[r]] - static_cast<long>(w.shift[i][r]) * ep.den;
    }
    return ep;
}

}  // namespace

int wall_length(const GaugeData& g, const std::vector<int>& bot, const std::vector<int>& top,
                const ExtAffineWeyl& w) {
    EndPoints ep = endpoints(g, bot, top, w.inverse());
    int count = 0;
    for (int i = 0; i < g.nvertices(); ++i) {
        for (int r = 0; r < g.v[i]; ++r)
            for (int s = r + 1; s < g.v[i]; ++s)
                count += integers_between(ep.a[i][r] - ep.a[i][s], ep.b[i][r] - ep.b[i][s],
                                          ep.den);
        if (has_framing_wall(g, i))
            for (int r = 0; r < g.v[i]; ++r)
                count += integers_between(ep.a[i][r], ep.b[i][r], ep.den);
    }
    for (const auto& [tail, head] : g.quiver.arrows)
        for (int r = 0; r < g.v[tail]; ++r)
            for (int s = 0; s < g.v[head]; ++s)
                count += integers_between(ep.a[tail][r] - ep.a[head][s],
                                          ep.b[tail][r] - ep.b[head][s], ep.den);
    return count;
}

std::vector<BasisDiagram> basis_diagrams(const GaugeData& g, const std::vector<int>& bot,
                                         const std::vector<int>& top, int bound) {
    CylDiagram::make(g, bot, {});
    CylDiagram::make(g, top, {});
    int m = static_cast<int>(bot.size());
    int cap = bound + 2;

    using Key = std::vector<int>;  // (vertex, slot, wind) triples by position
    auto key_of = [](const std::vector<Strand>& st) {
        Key k;
        k.reserve(st.size() * 3);
        for (const Strand& s : st) {
            k.push_back(s.vertex);
            k.push_back(s.slot);
            k.push_back(s.wind);
        }
        return k;
    };
    auto state_of = [](const Key& k) {
        std::vector<Strand> st(k.size() / 3);
        for (std::size_t p = 0; p < st.size(); ++p)
            st[p] = {k[3 * p], k[3 * p + 1], k[3 * p + 2]};
        return st;
    };

    struct Node {
        int dist = 0;
        Key parent;
        Slice via;
        bool root = true;
    };
    std::map<Key, Node> seen;
    std::deque<Key> dq;
    Key start = key_of(start_state(bot));
    seen[start] = {0, {}, Slice::e(), true};
    dq.push_back(start);

    auto relax = [&](const Key& from, int dist, const Slice& via, const std::vector<Strand>& st) {
        int weight = 0;
        if (via.kind == Slice::Kind::Psi) {
            weight = psi_event(g, st, via.k) ? 1 : 0;
        } else {
            const Strand& s = via.kind == Slice::Kind::SigmaPlus ? st[st.size() - 1] : st[0];
            if (std::abs(s.wind + (via.kind == Slice::Kind::SigmaPlus ? 1 : -1)) > cap) return;
            weight = has_framing_wall(g, s.vertex) ? 1 : 0;
        }
        int nd = dist + weight;
        if (nd > bound) return;
        std::vector<Strand> next = st;
        advance(next, via);
        Key nk = key_of(next);
        auto it = seen.find(nk);
        if (it != seen.end() && it->second.dist <= nd) return;
        seen[nk] = {nd, from, via, false};
        if (weight == 0)
            dq.push_front(nk);
        else
            dq.push_back(nk);
    };

    while (!dq.empty()) {
        Key cur = dq.front();
        dq.pop_front();
        Node node = seen[cur];
        std::vector<Strand> st = state_of(cur);
        for (int k = 0; k + 1 < m; ++k) relax(cur, node.dist, Slice::psi(k), st);
        if (m > 0) {
            relax(cur, node.dist, Slice::sigma_plus(), st);
            relax(cur, node.dist, Slice::sigma_minus(), st);
        }
    }

    std::vector<BasisDiagram> out;
    for (const auto& [key, node] : seen) {
        std::vector<Strand> st = state_of(key);
        if (strand_labels(st) != top) continue;
        std::vector<Slice> slices;
        Key cur = key;
        while (!seen.at(cur).root) {
            slices.push_back(seen.at(cur).via);
            cur = seen.at(cur).parent;
        }
        std::reverse(slices.begin(), slices.end());
        if (slices.empty()) slices.push_back(Slice::e());
        BasisDiagram bd;
        bd.w = terminal_of(g, st, top).inverse();
        bd.length = node.dist;
        bd.diagram = CylDiagram::make(g, bot, std::move(slices));
        out.push_back(std::move(bd));
    }
    std::sort(out.begin(), out.end(), [](const BasisDiagram& x, const BasisDiagram& y) {
        if (x.length != y.length) return x.length < y.length;
        return x.w < y.w;
    });
    return out;
}

TriangularityReport triangularity_check(const GaugeData& g, const std::vector<int>& bot,
                                        const std::vector<int>& top,
                                        const std::vector<BasisDiagram>& basis) {
    TriangularityReport rep;
    auto fail = [&rep](const std::string& what) {
        rep.pass = false;
        rep.lines.push_back("FAIL " + what);
    };
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (basis[a].w == basis[b].w) fail("duplicate label");
    for (const BasisDiagram& bd : basis) {
        std::string tag = "perm=" + bd.w.perm_string() + " shift=" + bd.w.shift_string();
        int len = wall_length(g, bot, top, bd.w);
        if (len != bd.length) {
            fail(tag + " length " + std::to_string(bd.length) + " != separation " +
                 std::to_string(len));
            continue;
        }
        SmashElement ev = evaluate(bd.diagram);
        if (ev.terms().find(bd.w) == ev.terms().end()) {
            fail(tag + " label not in support");
            continue;
        }
        bool ok = true;
        for (const auto& kv : ev.terms()) {
            const ExtAffineWeyl& w2 = kv.first;
            if (w2 == bd.w) continue;
            if (wall_length(g, bot, top, w2) >= len) {
                fail(tag + " support element not shorter");
                ok = false;
                break;
            }
        }
        if (ok)
            rep.lines.push_back(tag + " length=" + std::to_string(len) +
                                " support=" + std::to_string(ev.terms().size()) + " ok");
    }
    return rep;
}

CylDiagram wrap_diagram(const GaugeData& g, const std::vector<int>& bot, int i, int sign,
                        int dots) {
    if (i < 0 || i >= g.nvertices()) throw std::invalid_argument("vertex out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (dots < 0) throw std::invalid_argument("negative dot count");
    int m = static_cast<int>(bot.size());
    int pos = -1;
    for (int p = 0; p < m; ++p)
        if (bot[p] == i) pos = sign < 0 && pos >= 0 ? pos : p;
    if (pos < 0) throw std::invalid_argument("no strand at vertex");
    std::vector<Slice> slices;
    if (sign > 0) {
        for (int k = pos; k + 1 < m; ++k) slices.push_back(Slice::psi(k));
        slices.push_back(Slice::sigma_plus());
        for (int d = 0; d < dots; ++d) slices.push_back(Slice::dot(0));
        for (int k = 0; k < pos; ++k) slices.push_back(Slice::psi(k));
    } else {
        for (int k = pos - 1; k >= 0; --k) slices.push_back(Slice::psi(k));
        slices.push_back(Slice::sigma_minus());
        for (int d = 0; d < dots; ++d) slices.push_back(Slice::dot(m - 1));
        for (int k = m - 2; k >= pos; --k) slices.push_back(Slice::psi(k));
    }
    return CylDiagram::make(g, bot, std::move(slices));
}

WrapReport wrap_vs_iwahori(const GaugeData& g, int i, int sign, int p) {
    if (p < 1) throw std::invalid_argument("power must be positive");
    std::vector<int> bot = canonical_sequence(g);
    CylDiagram d = wrap_diagram(g, bot, i, sign, p - 1);
    SmashElement e = symmetrizer(g);
    SmashElement lhs = e * evaluate(d) * e;
    int slot = sign > 0 ? 0 : g.v[i] - 1;
    MonopoleSpec spec;
    spec.lam = Coweight::unit(g, i, slot, sign);
    spec.f = p > 1 ? MultiPoly::variable(VarId::gauge(i, slot), p - 1) : MultiPoly::constant(1);
    SmashElement rhs = iwahori_monopole(g, spec);
    WrapReport rep;
    rep.lhs = lhs.to_string();
    rep.rhs = rhs.to_string();
    if (lhs == rhs) {
        rep.pass = true;
        rep.sign = 1;
    } else if (lhs == -rhs) {
        rep.pass = true;
        rep.sign = -1;
    }
    return rep;
}

}  // namespace coulomb
