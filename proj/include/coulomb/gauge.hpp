#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coulomb/multipoly.hpp"

namespace coulomb {

/// Directed simple quiver: no loops, at most one arrow per unordered pair.
struct Quiver {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;  // (tail, head), 0-based

    static Quiver make(int n, std::vector<std::pair<int, int>> arrows);

    bool has_arrow(int i, int j) const;
    bool adjacent(int i, int j) const { return has_arrow(i, j) || has_arrow(j, i); }
    std::vector<int> out(int i) const;
    std::vector<int> in(int i) const;

    bool operator==(const Quiver&) const = default;
};

/// Quiver plus gauge/framing dimensions, the flavour sequence, optional pinned
/// flavour values, and an optional per-vertex coframing multiplicity (extra
/// matter attached to the opposite chirality, with parameter 0).
struct GaugeData {
    Quiver quiver;
    std::vector<int> v;
    std::vector<int> w;
    std::vector<int> flavour_seq;                      // i_1..i_N, 0-based vertices
    std::vector<std::optional<Scalar>> flavour_values; // nullopt = symbolic z[k]
    std::vector<int> coframing;

    static GaugeData make(Quiver q, std::vector<int> v, std::vector<int> w,
                          std::vector<int> flavour_seq,
                          std::vector<std::optional<Scalar>> flavour_values = {},
                          std::vector<int> coframing = {});

    int nvertices() const { return quiver.n; }
    int nflavours() const { return static_cast<int>(flavour_seq.size()); }
    std::vector<int> flavours_at(int i) const;
    /// z[k] or its pinned rational value.
    MultiPoly flavour_poly(int k) const;

    bool operator==(const GaugeData&) const = default;
};

/// Integer coweight: one integer per gauge variable slot.
struct Coweight {
    std::vector<std::vector<int>> lam;

    static Coweight zero(const GaugeData& g);
    static Coweight unit(const GaugeData& g, int i, int r, int sign = 1);

    int at(int i, int r) const { return lam[i][r]; }
    int& at(int i, int r) { return lam[i][r]; }
    int norm1() const;
    bool is_zero() const;
    bool is_dominant() const;  // weakly decreasing within each vertex

    Coweight operator+(const Coweight& o) const;
    Coweight operator-(const Coweight& o) const;
    Coweight operator-() const;
    bool operator==(const Coweight&) const = default;
    bool operator<(const Coweight& o) const { return lam < o.lam; }

    std::string to_string() const;  // per-vertex tuples joined "|"
};

struct MinusculeData {
    bool is_minuscule = false;
    std::vector<Coweight> orbit;                        // deduplicated Weyl orbit
    std::vector<std::pair<int, int>> stabilizer_gens;   // simple reflections (i, a), slots a,a+1
    std::vector<std::vector<int>> w_lambda;             // longest stabilizer element, per vertex
    std::vector<std::pair<int, int>> w0wl_word;         // reduced word for w0*w_lambda
};

MinusculeData minuscule_data(const GaugeData& g, const Coweight& lam);

/// Semigroup generators of the chamber given by a total order on all slots
/// (refining each vertex's slot order) and a split index p: prefix sums of
/// unit coweights up to p, negated suffix sums after p.
std::vector<Coweight> chamber_generators(const GaugeData& g,
                                         const std::vector<std::pair<int, int>>& order, int p);

/// Does every integral chamber point with |coordinates| <= box decompose as an
/// N-combination of the generators? The generators form a triangular lattice
/// basis, so membership is an exact linear solve plus integrality checks.
bool chamber_covered(const GaugeData& g, const std::vector<std::pair<int, int>>& order, int p,
                     int box);

/// All slot orders admissible for chamber_generators, lexicographically sorted.
std::vector<std::vector<std::pair<int, int>>> chamber_orders(const GaugeData& g);

/// Vertex sequence with each vertex i appearing v_i times; blockwise
/// topological, lexicographically least. Throws "cyclic: reorient" on cycles.
std::vector<int> canonical_sequence(const GaugeData& g);

/// Slot (i, r) of each sequence entry: r counts prior occurrences of i.
std::vector<std::pair<int, int>> sequence_slots(const std::vector<int>& seq);

}  // namespace coulomb
