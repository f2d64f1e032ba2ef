#include "coulomb/gauge.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "coulomb/linalg.hpp"
#include "coulomb/perm.hpp"

namespace coulomb {

Quiver Quiver::make(int n, std::vector<std::pair<int, int>> arrows) {
    if (n < 0) throw std::invalid_argument("quiver: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : arrows) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("quiver: arrow endpoint out of range");
        if (i == j) throw std::invalid_argument("non-simple quiver: loop at vertex " +
                                                std::to_string(i + 1));
        auto key = std::minmax(i, j);
        if (!seen.insert({key.first, key.second}).second)
            throw std::invalid_argument("non-simple quiver: multiple arrows between " +
                                        std::to_string(key.first + 1) + " and " +
                                        std::to_string(key.second + 1));
    }
    std::sort(arrows.begin(), arrows.end());
    return Quiver{n, std::move(arrows)};
}

bool Quiver::has_arrow(int i, int j) const {
    return std::binary_search(arrows.begin(), arrows.end(), std::pair<int, int>{i, j});
}

std::vector<int> Quiver::out(int i) const {
    std::vector<int> js;
    for (auto [a, b] : arrows)
        if (a == i) js.push_back(b);
    return js;
}

std::vector<int> Quiver::in(int i) const {
    std::vector<int> js;
    for (auto [a, b] : arrows)
        if (b == i) js.push_back(a);
    return js;
}

GaugeData GaugeData::make(Quiver q, std::vector<int> v, std::vector<int> w,
                          std::vector<int> flavour_seq,
                          std::vector<std::optional<Scalar>> flavour_values,
                          std::vector<int> coframing) {
    const int n = q.n;
    if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
        throw std::invalid_argument("bad framing: v/w size mismatch with quiver");
    for (int i = 0; i < n; ++i)
        if (v[i] < 0 || w[i] < 0) throw std::invalid_argument("bad framing: negative dimension");
    std::vector<int> count(n, 0);
    for (int i : flavour_seq) {
        if (i < 0 || i >= n) throw std::invalid_argument("bad framing: flavour vertex out of range");
        ++count[i];
    }
    if (count != w) throw std::invalid_argument("bad framing: flavour sequence multiplicities");
    if (!flavour_values.empty() && flavour_values.size() != flavour_seq.size())
        throw std::invalid_argument("bad framing: flavour value count");
    if (flavour_values.empty()) flavour_values.assign(flavour_seq.size(), std::nullopt);
    if (coframing.empty()) coframing.assign(n, 0);
    if (static_cast<int>(coframing.size()) != n)
        throw std::invalid_argument("bad framing: coframing size");
    for (int c : coframing)
        if (c < 0) throw std::invalid_argument("bad framing: negative coframing");
    return GaugeData{std::move(q), std::move(v), std::move(w),
                     std::move(flavour_seq), std::move(flavour_values), std::move(coframing)};
}

std::vector<int> GaugeData::flavours_at(int i) const {
    std::vector<int> ks;
    for (int k = 0; k < nflavours(); ++k)
        if (flavour_seq[k] == i) ks.push_back(k);
    return ks;
}

MultiPoly GaugeData::flavour_poly(int k) const {
    if (flavour_values[k]) return MultiPoly(*flavour_values[k]);
    return MultiPoly::variable(VarId::flavour(k));
}

Coweight Coweight::zero(const GaugeData& g) {
    Coweight c;
    for (int i = 0; i < g.nvertices(); ++i) c.lam.emplace_back(g.v[i], 0);
    return c;
}

Coweight Coweight::unit(const GaugeData& g, int i, int r, int sign) {
    Coweight c = zero(g);
    c.lam.at(i).at(r) = sign;
    return c;
}

int Coweight::norm1() const {
    int s = 0;
    for (const auto& row : lam)
        for (int x : row) s += std::abs(x);
    return s;
}

bool Coweight::is_zero() const {
    for (const auto& row : lam)
        for (int x : row)
            if (x != 0) return false;
    return true;
}

bool Coweight::is_dominant() const {
    for (const auto& row : lam)
        for (std::size_t r = 0; r + 1 < row.size(); ++r)
            if (row[r] < row[r + 1]) return false;
    return true;
}

Coweight Coweight::operator+(const Coweight& o) const {
    Coweight c = *this;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (std::size_t r = 0; r < lam[i].size(); ++r) c.lam[i][r] += o.lam[i][r];
    return c;
}

Coweight Coweight::operator-(const Coweight& o) const {
    Coweight c = *this;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (std::size_t r = 0; r < lam[i].size(); ++r) c.lam[i][r] -= o.lam[i][r];
    return c;
}

Coweight Coweight::operator-() const {
    Coweight c = *this;
    for (auto& row : c.lam)
        for (int& x : row) x = -x;
    return c;
}

std::string Coweight::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (i) s += '|';
        for (std::size_t r = 0; r < lam[i].size(); ++r) {
            if (r) s += ' ';
            s += std::to_string(lam[i][r]);
        }
    }
    return s;
}

namespace {

// 0, (1..1,0..0), or (0..0,-1..-1)?
bool component_minuscule(const std::vector<int>& row) {
    std::size_t r = 0;
    if (!row.empty() && row[0] == 1) {
        while (r < row.size() && row[r] == 1) ++r;
        for (; r < row.size(); ++r)
            if (row[r] != 0) return false;
        return true;
    }
    while (r < row.size() && row[r] == 0) ++r;
    for (; r < row.size(); ++r)
        if (row[r] != -1) return false;
    return true;
}

}  // namespace

MinusculeData minuscule_data(const GaugeData& g, const Coweight& lam) {
    MinusculeData out;
    out.is_minuscule = true;
    for (const auto& row : lam.lam)
        if (!component_minuscule(row)) out.is_minuscule = false;

    // Orbit: all per-vertex rearrangements, cartesian product, sorted.
    std::vector<std::vector<std::vector<int>>> per_vertex;
    for (const auto& row : lam.lam) {
        std::vector<int> sorted = row;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::vector<int>> arrangements;
        do {
            arrangements.push_back(sorted);
        } while (std::next_permutation(sorted.begin(), sorted.end()));
        per_vertex.push_back(std::move(arrangements));
    }
    std::vector<Coweight> orbit{Coweight{}};
    for (const auto& arrangements : per_vertex) {
        std::vector<Coweight> next;
        for (const auto& partial : orbit)
            for (const auto& row : arrangements) {
                Coweight c = partial;
                c.lam.push_back(row);
                next.push_back(std::move(c));
            }
        orbit = std::move(next);
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbit = std::move(orbit);

    for (int i = 0; i < g.nvertices(); ++i) {
        const auto& row = lam.lam[i];
        Perm wl = perm_identity(g.v[i]);
        for (std::size_t a = 0; a + 1 < row.size(); ++a)
            if (row[a] == row[a + 1]) out.stabilizer_gens.emplace_back(i, static_cast<int>(a));
        // Longest stabilizer element: reverse each maximal run of equal values.
        std::size_t a = 0;
        while (a < row.size()) {
            std::size_t b = a;
            while (b + 1 < row.size() && row[b + 1] == row[a]) ++b;
            for (std::size_t t = a; t <= b; ++t) wl[t] = static_cast<int>(a + b - t);
            a = b + 1;
        }
        out.w_lambda.push_back(wl);
        Perm w0wl = perm_mul(perm_longest(g.v[i]), wl);
        for (int letter : reduced_word(w0wl)) out.w0wl_word.emplace_back(i, letter);
    }
    return out;
}

std::vector<Coweight> chamber_generators(const GaugeData& g,
                                         const std::vector<std::pair<int, int>>& order, int p) {
    const int m = static_cast<int>(order.size());
    int total = std::accumulate(g.v.begin(), g.v.end(), 0);
    if (m != total || p < 0 || p > m) throw std::invalid_argument("malformed order");
    std::vector<int> next_slot(g.nvertices(), 0);
    for (auto [i, r] : order) {
        if (i < 0 || i >= g.nvertices() || r != next_slot[i]++)
            throw std::invalid_argument("malformed order");
    }
    std::vector<Coweight> gens;
    Coweight prefix = Coweight::zero(g);
    for (int s = 0; s < p; ++s) {
        prefix = prefix + Coweight::unit(g, order[s].first, order[s].second);
        gens.push_back(prefix);
    }
    Coweight suffix = Coweight::zero(g);
    std::vector<Coweight> tail;
    for (int s = m - 1; s >= p; --s) {
        suffix = suffix + Coweight::unit(g, order[s].first, order[s].second);
        tail.push_back(-suffix);
    }
    std::reverse(tail.begin(), tail.end());
    gens.insert(gens.end(), tail.begin(), tail.end());
    return gens;
}

bool chamber_covered(const GaugeData& g, const std::vector<std::pair<int, int>>& order, int p,
                     int box) {
    const auto gens = chamber_generators(g, order, p);
    const int m = static_cast<int>(order.size());
    auto flat = [&](const Coweight& c) {
        std::vector<Scalar> x(m);
        for (int t = 0; t < m; ++t) x[t] = Scalar(c.at(order[t].first, order[t].second));
        return x;
    };
    std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(m));
    for (int col = 0; col < m; ++col) {
        auto gcol = flat(gens[col]);
        for (int row = 0; row < m; ++row) a[row][col] = gcol[row];
    }
    // Enumerate chamber points coordinatewise in [-box, box]: weakly
    // decreasing along the order, nonnegative through p, nonpositive after.
    std::vector<int> x(m);
    auto in_chamber = [&] {
        for (int t = 0; t + 1 < m; ++t)
            if (x[t] < x[t + 1]) return false;
        if (p > 0 && x[p - 1] < 0) return false;
        if (p < m && x[p] > 0) return false;
        return true;
    };
    std::vector<int> idx(m, -box);
    while (true) {
        for (int t = 0; t < m; ++t) x[t] = idx[t];
        if (in_chamber()) {
            std::vector<Scalar> b(m);
            for (int t = 0; t < m; ++t) b[t] = Scalar(x[t]);
            auto sol = solve_linear(a, b);
            if (!sol) return false;
            for (const Scalar& c : *sol)
                if (c < 0 || c.get_den() != 1) return false;
        }
        int t = m - 1;
        while (t >= 0 && idx[t] == box) idx[t--] = -box;
        if (t < 0) break;
        ++idx[t];
    }
    return true;
}

std::vector<std::vector<std::pair<int, int>>> chamber_orders(const GaugeData& g) {
    std::vector<int> labels;
    for (int i = 0; i < g.nvertices(); ++i) labels.insert(labels.end(), g.v[i], i);
    std::sort(labels.begin(), labels.end());
    std::vector<std::vector<std::pair<int, int>>> out;
    do {
        std::vector<std::pair<int, int>> order;
        std::vector<int> next_slot(g.nvertices(), 0);
        for (int i : labels) order.emplace_back(i, next_slot[i]++);
        out.push_back(std::move(order));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

std::vector<int> canonical_sequence(const GaugeData& g) {
    const int n = g.nvertices();
    std::vector<int> indeg(n, 0);
    for (auto [i, j] : g.quiver.arrows) ++indeg[j];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<int> seq;
    int done = 0;
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        ++done;
        seq.insert(seq.end(), g.v[i], i);
        for (int j : g.quiver.out(i))
            if (--indeg[j] == 0) ready.push(j);
    }
    if (done != n) throw std::invalid_argument("cyclic: reorient");
    return seq;
}

std::vector<std::pair<int, int>> sequence_slots(const std::vector<int>& seq) {
    std::map<int, int> next_slot;
    std::vector<std::pair<int, int>> out;
    for (int i : seq) out.emplace_back(i, next_slot[i]++);
    return out;
}

}  // namespace coulomb
