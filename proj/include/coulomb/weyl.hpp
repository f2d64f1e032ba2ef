#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coulomb/gauge.hpp"
#include "coulomb/locrat.hpp"
#include "coulomb/perm.hpp"

namespace coulomb {

/// Element (sigma, lambda) of the extended affine Weyl group: per-vertex
/// permutation and integer shift. Acts on gauge variables by
/// g(w[i,r]) = w[i,sigma(r)] + lambda_{i,sigma(r)}*h; z and h are fixed.
struct ExtAffineWeyl {
    std::vector<Perm> perm;
    std::vector<std::vector<int>> shift;

    static ExtAffineWeyl identity(const GaugeData& g);
    static ExtAffineWeyl translation(const Coweight& lam);
    /// Adjacent reflection s_{i,a} swapping slots a, a+1 at vertex i.
    static ExtAffineWeyl reflection(const GaugeData& g, int i, int a);
    static ExtAffineWeyl permutation(const GaugeData& g, int i, Perm p);

    bool is_identity() const;
    bool perm_trivial() const;
    Coweight translation_part() const { return Coweight{shift}; }
    int sign() const;

    ExtAffineWeyl operator*(const ExtAffineWeyl& o) const;
    ExtAffineWeyl inverse() const;

    /// Image of a gauge variable: (variable, h-multiple).
    std::pair<VarId, int> act_var(VarId v) const;
    MultiPoly act(const MultiPoly& f) const;
    LocRat act(const LocRat& f) const;
    /// Affine action on the shift lattice: eta |-> sigma.eta - lambda.
    Coweight act_point(const Coweight& eta) const;

    bool operator==(const ExtAffineWeyl&) const = default;
    /// Canonical term order: shift lexicographic, then perm one-line.
    bool operator<(const ExtAffineWeyl& o) const {
        return shift != o.shift ? shift < o.shift : perm < o.perm;
    }

    std::string perm_string() const;   // "2 1|1"
    std::string shift_string() const;  // "1 0|-1"
};

}  // namespace coulomb
