#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coulomb/smash.hpp"

namespace coulomb {

/// Type A chain data in Gelfand-Zetlin row form: rows r = (r_1..r_n), gauge
/// vertices 1..n-1 of ranks r_1..r_{n-1}, and r_n flavours at vertex n-1.
/// Default orientation has arrows i+1 -> i and symbolic framing values; the
/// reoriented variant has arrows i -> i+1 and coframing (flavours pinned at
/// zero), and its generators are built in left normal form.
struct OgzData {
    int n = 0;
    std::vector<int> r;
    bool reoriented = false;
    GaugeData gauge;

    static OgzData make(const std::vector<int>& r, bool reoriented = false);
    /// Recovers row data from chain-shaped gauge data; rejects anything else.
    static OgzData from_gauge(const GaugeData& g);

    OgzData reorient() const { return make(r, !reoriented); }
};

/// Row variable x_{i,k}: -w[i,k] - i*h/2 for gauge rows, -z[k] - n*h/2 for the
/// top row. The reoriented variant mirrors the h-offset signs, with the top
/// row reduced to n*h/2 by its pinned flavours. Indices are 1-based.
MultiPoly ogz_x(const OgzData& d, int i, int k);

/// phi_{i,k}^{power} = u[i,k]^{-power}.
SmashElement ogz_phi(const OgzData& d, int i, int k, int power = 1);

struct OgzPair {
    SmashElement plus, minus;
};

/// Default orientation (right normal form, shifts after coefficients):
///   X_i^+ = -sum_k prod_l (x_{i+1,l} - x_{i,k}) / prod_{l!=k} (x_{i,l} - x_{i,k}) * phi_{i,k}
///   X_i^- =  sum_k prod_l (x_{i-1,l} - x_{i,k}) / prod_{l!=k} (x_{i,l} - x_{i,k}) * phi_{i,k}^{-1}
/// Reoriented data builds the left normal form with the same row pattern:
///   X_i^+ =  sum_k phi_{i,k} * [x_{i+1} products], X_i^- = -sum_k phi_{i,k}^{-1} * [x_{i-1} products].
OgzPair ogz_generators(const OgzData& d, int i);

struct OgzCompareReport {
    bool pass = false;
    std::vector<int> plus_sign, minus_sign;  // one recorded sign per gauge row
    std::vector<std::string> lines;
};

/// Default orientation: X_i^+ vs image(E(i,1)) and X_i^- vs image(F(i,1)).
/// Reoriented data compares against the generator images of the composed map
/// twisted by both anti-involutions: X_i^+ vs transport(image(F(i,1))) and
/// X_i^- vs transport(image(E(i,1))).
OgzCompareReport compare_with_yangian(const OgzData& d);

/// Anti-involution u^lam -> u^{-lam} fixing coefficients: f * u^lam maps to
/// u^{-lam} * f. Requires translation-only group parts.
SmashElement antiinvolution_transport(const SmashElement& a);

/// Terms (g, f) with the element equal to sum of g * f (shifts on the left).
std::vector<std::pair<ExtAffineWeyl, LocRat>> left_terms(const SmashElement& a);
std::string serialize_left(const SmashElement& a, HMode mode = HMode::Symbolic);

/// Coefficient-wise permutation of the symbolic flavour variables z[k].
SmashElement permute_flavours(const SmashElement& a, const Perm& p);
/// Average over all flavour permutations.
SmashElement symmetrize_flavours(const SmashElement& a);
/// Invariance under permuting flavours: cuts out the symmetrized subalgebra
/// from the one with free top-row polynomials.
bool flavour_symmetric(const SmashElement& a);

}  // namespace coulomb
